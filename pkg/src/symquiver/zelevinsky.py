"""Zelevinsky permutations and the image sets of the orbit dictionary.

Block rows and block columns of the ``2d x 2d`` matrices here follow the
bipartite labeling: rows ``y_0, ..., y_{k-1}, x_k, ..., x_1`` and columns
``x_k, ..., x_1, y_0, ..., y_{k-1}``.  For a symmetric dimension vector the
two size sequences coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Sequence

from .linalg import block_rank_matrix
from .perms import (
    Permutation, PermutationError, alpha, bruhat_leq, diagonal_fixed_points,
    involutions, is_min_double_coset_rep,
)
from .quiver import Interval, QuiverError, SymQuiverA, all_intervals, bipartite_reduce, check_dims
from .reps import (
    MultiplicityVector, RankVector, Representation, enumerate_symmetric_orbits,
    orbit_rank_vector, psi, rep_from_multiplicities, zeta,
)

__all__ = [
    "BlockStructure", "block_structure", "block_counts",
    "zelevinsky_permutation", "sym_zelevinsky_permutation",
    "v_square", "v_max", "v_max_unsigned", "image_set", "in_J",
    "ranks_from_block_ranks", "ranks_from_permutation",
]


@dataclass(frozen=True)
class BlockStructure:
    sizes: tuple[int, ...]
    col_sizes: tuple[int, ...] | None = None

    @property
    def cols(self) -> tuple[int, ...]:
        return self.col_sizes if self.col_sizes is not None else self.sizes

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        return tuple(accumulate(self.sizes))

    def __len__(self) -> int:
        return len(self.sizes)


def block_structure(Q: SymQuiverA, dims: Sequence[int]) -> BlockStructure:
    """Block sizes ``d(y_0), ..., d(y_{k-1}), d(x_k), ..., d(x_1)`` of a bipartite quiver."""
    rows, cols = Q.layout.zeta_blocks(dims)
    return BlockStructure(tuple(rows), None if rows == cols else tuple(cols))


def block_counts(rbar: Sequence[Sequence[int]]) -> list[list[int]]:
    """Number of 1s in each block, by inclusion-exclusion of block ranks."""
    P = len(rbar)
    Qn = len(rbar[0]) if P else 0

    def r(p, q):
        return rbar[p - 1][q - 1] if p >= 1 and q >= 1 else 0
    return [[r(p, q) + r(p - 1, q - 1) - r(p - 1, q) - r(p, q - 1) for q in range(1, Qn + 1)]
            for p in range(1, P + 1)]


def _place(counts: list[list[int]], rows: Sequence[int], cols: Sequence[int]) -> Permutation:
    B, C = len(rows), len(cols)
    for p in range(B):
        if any(c < 0 for c in counts[p]):
            raise QuiverError("inconsistent block ranks: a block would hold a negative number of 1s")
        if sum(counts[p]) != rows[p]:
            raise QuiverError(f"inconsistent block ranks: block row {p + 1} would hold "
                              f"{sum(counts[p])} ones, not {rows[p]}")
    for q in range(C):
        if sum(counts[p][q] for p in range(B)) != cols[q]:
            raise QuiverError(f"inconsistent block ranks: block column {q + 1} has the wrong count")
    row_start = [0, *accumulate(rows)]
    col_start = [0, *accumulate(cols)]
    # rows of block row p go to block columns 1, 2, ... in order; dually for columns
    row_alloc = [[None] * C for _ in range(B)]
    for p in range(B):
        nxt = row_start[p]
        for q in range(C):
            row_alloc[p][q] = range(nxt, nxt + counts[p][q])
            nxt += counts[p][q]
    w = [0] * row_start[-1]
    for q in range(C):
        nxt = col_start[q]
        for p in range(B):
            cs = range(nxt, nxt + counts[p][q])
            nxt += counts[p][q]
            for i, j in zip(row_alloc[p][q], cs):
                w[i] = j + 1
    return Permutation(tuple(w))


def zelevinsky_permutation(block_ranks, blocks: BlockStructure | Sequence[int] | None = None,
                           col_blocks: Sequence[int] | None = None) -> Permutation:
    """The permutation whose block ranks are ``block_ranks`` and whose 1s run NW to SE in each block.

    ``block_ranks`` may also be a :class:`Representation`; the block ranks of
    its (unsigned) Zelevinsky map are then computed first.

    >>> rb = [[0, 1, 1, 1], [1, 2, 3, 4], [1, 3, 4, 5], [1, 4, 5, 8]]
    >>> str(zelevinsky_permutation(rb, [1, 3, 1, 3]))
    '21563478'
    """
    if isinstance(block_ranks, Representation):
        W = block_ranks if block_ranks.quiver.is_bipartite() else psi(block_ranks)
        bs = block_structure(W.quiver, W.dims)
        rbar = block_rank_matrix(zeta(W), bs.sizes, bs.cols)
        return _place(block_counts(rbar), bs.sizes, bs.cols)
    if blocks is None:
        raise TypeError("block sizes are required with a block rank table")
    if isinstance(blocks, BlockStructure):
        rows, cols = blocks.sizes, blocks.cols
    else:
        rows = tuple(blocks)
        cols = tuple(col_blocks) if col_blocks is not None else rows
    if len(block_ranks) != len(rows) or any(len(r) != len(cols) for r in block_ranks):
        raise QuiverError("block rank table does not match the block structure")
    return _place(block_counts(block_ranks), rows, cols)


def sym_zelevinsky_permutation(W: Representation, epsilon: int | None = None) -> Permutation:
    """``v(W)`` when epsilon is +1 and ``alpha(v(W))`` when it is -1."""
    eps = W.quiver.epsilon
    if epsilon is not None and epsilon != eps:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {eps}")
    Wb = W if W.quiver.is_bipartite() else psi(W)
    v = zelevinsky_permutation(Wb)
    if eps == 1:
        return v
    return alpha(v, block_structure(Wb.quiver, Wb.dims).sizes)


def v_square(d: int) -> Permutation:
    """``d+1, ..., 2d, 1, ..., d``."""
    if d < 1:
        raise PermutationError("d must be positive")
    return Permutation(tuple(range(d + 1, 2 * d + 1)) + tuple(range(1, d + 1)))


def _reduced(Q: SymQuiverA, dims: Sequence[int]):
    dims = check_dims(Q, dims)
    if Q.is_bipartite():
        return Q, dims, None
    red = bipartite_reduce(Q, dims)
    return red.target, red.dims, red


def _max_orbit_rep(Q: SymQuiverA, dims: Sequence[int]) -> Representation:
    orbits = enumerate_symmetric_orbits(Q, dims)
    ranks = [orbit_rank_vector(Q, dims, m) for m in orbits]
    top = [i for i, r in enumerate(ranks) if all(s.leq(r) for s in ranks)]
    if len(top) != 1:
        raise AssertionError("no unique rank-dominant orbit")
    return rep_from_multiplicities(Q, dims, orbits[top[0]])


def v_max(Q: SymQuiverA, dims: Sequence[int], epsilon: int | None = None) -> Permutation:
    """Symmetric Zelevinsky permutation of the unique rank-dominant orbit."""
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    return sym_zelevinsky_permutation(_max_orbit_rep(Q, dims))


def v_max_unsigned(Q: SymQuiverA, dims: Sequence[int]) -> Permutation:
    """Zelevinsky permutation ``v(W)`` of the rank-dominant orbit, before ``alpha``."""
    return zelevinsky_permutation(_max_orbit_rep(Q, dims))


def in_J(u: Permutation, blocks: Sequence[int]) -> bool:
    """Involution, minimal double coset representative, even number of diagonal 1s per block."""
    return (u.is_involution() and is_min_double_coset_rep(u, blocks)
            and all(len(f) % 2 == 0 for f in diagonal_fixed_points(u, blocks)))


# ---------------------------------------------------------------------------
# interval ranks read off block ranks

def _interval_for_corner(Q: SymQuiverA, dims: Sequence[int], p: int, q: int):
    """Covered dimension and the interval governing block rank ``(p, q)``.

    The northwest ``p x q`` block corner of ``[[V_Q, I], [I, 0]]`` has rank
    (identity rows/columns it captures) + ``r_J`` for an interval ``J``.
    """
    L = Q.layout
    k = L.k
    zr, zc = L.zeta_row_vertices(), L.zeta_col_vertices()
    rows, cols = zr[:p], zc[:q]
    # identity blocks: y rows against y columns, x rows against x columns
    covered_y = [z for z in rows[:k] if z in cols[k:]]
    covered_x = [z for z in rows[k:] if z in cols[:k]]
    free_y = [z for z in rows[:k] if z not in covered_y]
    free_x = [z for z in cols[:k] if z not in covered_x]
    covered = sum(dims[z - 1] for z in covered_y + covered_x)
    fy, fx = set(free_y), set(free_x)
    live = [z for z in fy if (z - 1 in fx) or (z + 1 in fx)]
    live += [z for z in fx if (z - 1 in fy) or (z + 1 in fy)]
    if not live:
        return covered, None
    J = Interval(min(live), max(live))
    if any((z in rows[:k] and z not in fy) or (z in cols[:k] and z not in fx)
           for z in J.vertices()):
        return covered, None
    if not all((z in fy) or (z in fx) for z in J.vertices()):
        return covered, None
    return covered, J


def ranks_from_block_ranks(Q: SymQuiverA, dims: Sequence[int],
                           rbar: Sequence[Sequence[int]]) -> RankVector:
    """Interval ranks of a bipartite quiver recovered from a block rank table."""
    dims = check_dims(Q, dims)
    B = 2 * Q.layout.k
    found: dict[Interval, int] = {}
    for p in range(1, B + 1):
        for q in range(1, B + 1):
            covered, J = _interval_for_corner(Q, dims, p, q)
            if J is None or len(J) < 2:
                continue
            val = rbar[p - 1][q - 1] - covered
            if found.setdefault(J, val) != val:
                raise QuiverError(f"block ranks disagree about r{J}")
    vals = []
    for J in all_intervals(Q.n):
        if len(J) == 1:
            vals.append(0)
        elif J in found:
            vals.append(found[J])
        else:
            raise AssertionError(f"interval {J} is not visible in the block ranks")
    return RankVector(Q.n, tuple(vals))


def ranks_from_permutation(Q: SymQuiverA, dims: Sequence[int], v: Permutation) -> RankVector:
    bs = block_structure(Q, dims)
    rbar = block_rank_matrix(v.matrix(), bs.sizes, bs.cols)
    return ranks_from_block_ranks(Q, dims, rbar)


# ---------------------------------------------------------------------------
# image sets

def image_set(Q: SymQuiverA, dims: Sequence[int], epsilon: int | None = None) -> list[Permutation]:
    """The image of the orbit dictionary, computed from permutations alone.

    Bipartite quivers: involutions in ``[v, v_square]`` that are minimal
    double coset representatives (epsilon = +1), or ``alpha`` of those with
    even diagonal block counts (epsilon = -1).  The lower end ``v`` is the
    Zelevinsky permutation of the dense orbit *before* ``alpha``: every
    ``u`` in the second family lies below its own image ``alpha(u)``, so
    the fixed-point-free ``v_max`` would be too high a floor.  Other orientations use the
    bipartite reduction and keep the permutations whose derived interval
    ranks are full on every contracted arrow.
    """
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    T, dt, red = _reduced(Q, dims)
    bs = block_structure(T, dt)
    d = sum(bs.sizes) // 2
    if d == 0:
        return [Permutation(())]
    top = v_square(d)
    bottom = v_max_unsigned(T, dt)
    cands = involutions(2 * d, restrict_to=(bottom, top))
    out = []
    for u in cands:
        if not is_min_double_coset_rep(u, bs.sizes):
            continue
        if T.epsilon == -1:
            if not in_J(u, bs.sizes):
                continue
            u = alpha(u, bs.sizes)
        out.append(u)
    if red is not None:
        keep = []
        for u in out:
            r = ranks_from_permutation(T, dt, u)
            if all(r[(c, c + 1)] == dt[c - 1] for c in red.contracted):
                keep.append(u)
        out = keep
    return sorted(set(out))
