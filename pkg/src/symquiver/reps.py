"""Representations of symmetric type A quivers.

A *symmetric point* stores matrices over the positive and tau-fixed arrows
only; :func:`symmetric_embed` fills in the negative arrows.  The matrix over
edge ``e`` has shape ``d(head) x d(tail)``.

Orbits are labeled by multiplicity vectors (how many copies of each interval
indecomposable appear) and, equivalently, by interval rank vectors.  For a
quiver that is not bipartite, rank vectors live on the bipartite reduction
and are indexed by its intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import IntMatrix, block_matrix, inverse, rank
from .quiver import (
    BipartiteReduction, Interval, QuiverError, SymQuiverA,
    all_intervals, bipartite_reduce, check_dims, fixed_form, fixed_form_inverse,
)

__all__ = [
    "IntervalFunction", "MultiplicityVector", "RankVector", "Representation",
    "symmetric_embed", "vertex_form", "is_symmetric",
    "zelevinsky_matrix", "zeta", "sym_zelevinsky_map",
    "interval_rank_vector", "ranks_of_multiplicities",
    "rep_from_multiplicities", "multiplicities_from_ranks",
    "enumerate_symmetric_orbits", "psi", "contract_rep", "lift_multiplicities",
]


# ---------------------------------------------------------------------------
# interval-indexed vectors

@lru_cache(maxsize=None)
def _interval_index(n: int) -> dict[Interval, int]:
    return {J: i for i, J in enumerate(all_intervals(n))}


@dataclass(frozen=True)
class IntervalFunction:
    """A function on the intervals of an ``n``-vertex path, stored in ``(lo, hi)`` order."""
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n * (self.n + 1) // 2:
            raise ValueError("one value per interval is required")

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping) -> IntervalFunction:
        idx = _interval_index(n)
        vals = [0] * len(idx)
        for J, v in mapping.items():
            J = Interval(*J)
            if J not in idx:
                raise QuiverError(f"{J} is not an interval of 1..{n}")
            vals[idx[J]] = int(v)
        return cls(n, tuple(vals))

    def __getitem__(self, J) -> int:
        return self.values[_interval_index(self.n)[Interval(*J)]]

    def items(self) -> Iterator[tuple[Interval, int]]:
        return zip(all_intervals(self.n), self.values)

    def support(self) -> dict[Interval, int]:
        return {J: v for J, v in self.items() if v}

    def leq(self, other: IntervalFunction) -> bool:
        if self.n != other.n:
            raise ValueError("interval functions on different quivers")
        return all(a <= b for a, b in zip(self.values, other.values))

    def to_json(self) -> dict[str, int]:
        return {f"{J.lo}-{J.hi}": v for J, v in self.items()}

    def __str__(self) -> str:
        inner = " ".join(f"{J}:{v}" for J, v in self.items() if v)
        return "{" + inner + "}"


class MultiplicityVector(IntervalFunction):
    """Krull-Schmidt multiplicities of interval indecomposables."""

    def dims(self) -> tuple[int, ...]:
        d = [0] * self.n
        for J, v in self.items():
            for z in J.vertices():
                d[z - 1] += v
        return tuple(d)

    def validate(self, Q: SymQuiverA, dims: Sequence[int]) -> None:
        if self.n != Q.n:
            raise QuiverError(f"multiplicities are for {self.n} vertices, quiver has {Q.n}")
        if any(v < 0 for v in self.values):
            raise QuiverError("multiplicities must be nonnegative")
        got = self.dims()
        if got != tuple(dims):
            raise QuiverError(
                f"dimension constraint fails: multiplicities give {list(got)}, expected {list(dims)}")
        for J, v in self.items():
            if self[J.tau(self.n)] != v:
                raise QuiverError(f"symmetry fails: m{J} = {v} but m{J.tau(self.n)} = {self[J.tau(self.n)]}")
            if Q.epsilon == -1 and J.tau(self.n) == J and v % 2:
                raise QuiverError(f"epsilon = -1 needs even multiplicity on tau-fixed {J}, got {v}")


class RankVector(IntervalFunction):
    """Interval ranks ``r_J``; singletons carry rank 0."""


# ---------------------------------------------------------------------------
# representations

@dataclass(frozen=True)
class Representation:
    quiver: SymQuiverA
    dims: tuple[int, ...]
    mats: tuple[IntMatrix | None, ...]   # mats[e - 1] for edge e
    symmetric_point: bool = False

    def __post_init__(self):
        Q = self.quiver
        if len(self.dims) != Q.n or len(self.mats) != Q.n - 1:
            raise QuiverError("dimension vector / matrix list does not fit the quiver")
        for e in Q.edges:
            M = self.mats[e - 1]
            kind = Q.edge_kind(e)
            if M is None:
                if not (self.symmetric_point and kind == "negative"):
                    raise QuiverError(f"missing matrix over edge {e} ({Q.tail(e)}->{Q.head(e)})")
                continue
            if self.symmetric_point and kind == "negative":
                raise QuiverError(f"a symmetric point carries no matrix over negative edge {e}")
            want = (self.dims[Q.head(e) - 1], self.dims[Q.tail(e) - 1])
            if M.shape != want:
                raise QuiverError(
                    f"shape mismatch over arrow {Q.tail(e)}->{Q.head(e)}: got {M.shape}, want {want}")
        if self.symmetric_point:
            check_dims(Q, self.dims)
            b = Q.fixed_edge
            if b is not None:
                M = self.mats[b - 1]
                if M != M.T.scale(Q.epsilon):
                    kind = "symmetric" if Q.epsilon == 1 else "skew-symmetric"
                    raise QuiverError(f"matrix over the tau-fixed arrow must be {kind}")

    @classmethod
    def symmetric(cls, Q: SymQuiverA, dims: Sequence[int],
                  mats: Mapping[int, IntMatrix | Sequence[Sequence[int]]]) -> Representation:
        """A symmetric point from ``{edge: matrix}`` over positive and fixed edges."""
        dims = check_dims(Q, dims)
        out: list[IntMatrix | None] = []
        for e in Q.edges:
            if Q.edge_kind(e) == "negative":
                if e in mats:
                    raise QuiverError(f"edge {e} is negative; give only positive and fixed arrows")
                out.append(None)
                continue
            M = mats.get(e)
            if M is None:
                M = IntMatrix.zeros(dims[Q.head(e) - 1], dims[Q.tail(e) - 1])
            elif not isinstance(M, IntMatrix):
                M = IntMatrix.from_rows(M, cols=None if len(M) else dims[Q.tail(e) - 1])
            out.append(M)
        return cls(Q, dims, tuple(out), symmetric_point=True)

    @classmethod
    def zero(cls, Q: SymQuiverA, dims: Sequence[int]) -> Representation:
        return cls.symmetric(Q, dims, {})

    def mat(self, e: int) -> IntMatrix:
        M = self.mats[e - 1]
        if M is None:
            raise QuiverError(f"edge {e} is negative and this is a symmetric point; embed first")
        return M

    def full(self) -> Representation:
        return symmetric_embed(self) if self.symmetric_point else self


def vertex_form(Q: SymQuiverA, dims: Sequence[int], z: int) -> IntMatrix:
    if z == Q.fixed_vertex:
        return fixed_form(dims[z - 1], Q.epsilon)
    return IntMatrix.identity(dims[z - 1])


def _vertex_form_inverse(Q: SymQuiverA, dims: Sequence[int], z: int) -> IntMatrix:
    if z == Q.fixed_vertex:
        return fixed_form_inverse(dims[z - 1], Q.epsilon)
    return IntMatrix.identity(dims[z - 1])


def symmetric_embed(V: Representation) -> Representation:
    """Fill negative arrows with ``Omega_{t(a)}^{-1} V_a^T Omega_{h(a)}`` where ``a = tau(b)``."""
    if not V.symmetric_point:
        raise QuiverError("symmetric_embed expects a symmetric point")
    Q, d = V.quiver, V.dims
    mats = list(V.mats)
    for b in Q.negative_edges:
        a = Q.tau_edge(b)
        A = V.mat(a)
        mats[b - 1] = _vertex_form_inverse(Q, d, Q.tail(a)) @ A.T @ vertex_form(Q, d, Q.head(a))
    return Representation(Q, d, tuple(mats), symmetric_point=False)


def is_symmetric(V: Representation) -> bool:
    """Whether a full representation lies in the image of the symmetric embedding."""
    if V.symmetric_point:
        return True
    Q = V.quiver
    try:
        check_dims(Q, V.dims)
        sp = Representation(Q, V.dims, tuple(None if Q.edge_kind(e) == "negative" else V.mats[e - 1]
                                             for e in Q.edges), symmetric_point=True)
    except QuiverError:
        return False
    return symmetric_embed(sp) == V


# ---------------------------------------------------------------------------
# Zelevinsky matrices (bipartite quivers)

def _bipartite(V: Representation) -> Representation:
    if not V.quiver.is_bipartite():
        raise QuiverError(f"{V.quiver.describe()} is not bipartite; apply psi() first")
    return V.full()


def zelevinsky_matrix(V: Representation, signed: bool = False) -> IntMatrix:
    """The staircase block matrix: rows ``y_0..y_{k-1}``, columns ``x_k..x_1``.

    With ``signed=True`` the second half of the staircase (``alpha_k`` back to
    ``beta_{...}``) is multiplied by epsilon.
    """
    V = _bipartite(V)
    Q, d = V.quiver, V.dims
    L = Q.layout
    k = L.k
    rows, cols = L.row_vertices(), L.col_vertices()
    grid = [[IntMatrix.zeros(d[r - 1], d[c - 1]) for c in cols] for r in rows]
    for pos, (_, e, yi, xi) in enumerate(L.staircase(), start=1):
        M = V.mat(e)
        if signed and pos > k:
            M = M.scale(Q.epsilon)
        grid[yi][k - xi] = M
    return block_matrix(grid)


def zeta(V: Representation) -> IntMatrix:
    """Unsigned Zelevinsky map ``[[V_Q, I], [I, 0]]``."""
    return _zeta(V, signed=False)


def sym_zelevinsky_map(V: Representation, epsilon: int | None = None) -> IntMatrix:
    """Signed Zelevinsky map ``[[V_Q^eps, I], [eps I, 0]]``."""
    if epsilon is not None and epsilon != V.quiver.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {V.quiver.epsilon}")
    return _zeta(V, signed=True)


def _zeta(V: Representation, signed: bool) -> IntMatrix:
    VQ = zelevinsky_matrix(V, signed=signed)
    eps = V.quiver.epsilon if signed else 1
    a, b = VQ.shape
    return block_matrix([[VQ, IntMatrix.identity(a)],
                         [IntMatrix.identity(b).scale(eps), IntMatrix.zeros(b, a)]])


# ---------------------------------------------------------------------------
# bipartite reduction of representations

def psi(V: Representation, red: BipartiteReduction | None = None) -> Representation:
    """Symmetric point on the bipartite reduction whose contraction is ``V``."""
    Q = V.quiver
    if red is None:
        red = bipartite_reduce(Q, V.dims)
    if red.is_identity:
        return V if V.symmetric_point else _symmetric_part(V)
    T, dt = red.target, red.dims
    sp = _symmetric_part(V) if not V.symmetric_point else V
    mats: dict[int, IntMatrix] = {}
    for e in Q.edges:
        if Q.edge_kind(e) != "negative":
            mats[red.edge_map[e - 1]] = sp.mat(e)
    for z, zh, zt in red.split:
        c = min(zh, zt)
        if T.edge_kind(c) == "negative":
            continue
        if z == Q.fixed_vertex:
            # c : m -> star uses Omega^{-1}, c : star -> m uses Omega
            m_dir = Q.arrow_dirs[z - 2]
            X = fixed_form_inverse(dt[zh - 1], Q.epsilon) if m_dir == "R" \
                else fixed_form(dt[zh - 1], Q.epsilon)
        else:
            X = IntMatrix.identity(dt[zh - 1])
        mats[c] = X
    return Representation.symmetric(T, dt, mats)


def _symmetric_part(V: Representation) -> Representation:
    Q = V.quiver
    if not is_symmetric(V):
        raise QuiverError("representation is not in the image of the symmetric embedding")
    return Representation(Q, V.dims, tuple(None if Q.edge_kind(e) == "negative" else V.mats[e - 1]
                                           for e in Q.edges), symmetric_point=True)


def contract_rep(Vt: Representation, red: BipartiteReduction) -> Representation:
    """Contract the marked arrows of a representation of the reduced quiver.

    A split vertex is identified with its lower-numbered copy, the one on the
    positive side; arrows at the other copy are composed with the inverse of
    the contracted map.
    """
    Vt = Vt.full()
    Q, T = red.source, red.target
    upper = {max(zh, zt): min(zh, zt) for _, zh, zt in red.split}
    mats = []
    for e in Q.edges:
        et = red.edge_map[e - 1]
        M = Vt.mat(et)
        h, t = T.head(et), T.tail(et)
        if h in upper:
            M = inverse(Vt.mat(upper[h])) @ M
        if t in upper:
            M = M @ inverse(Vt.mat(upper[t]))
        mats.append(M)
    dims = tuple(red.dims[red.nu.index(z)] for z in range(1, Q.n + 1))
    return Representation(Q, dims, tuple(mats))


# ---------------------------------------------------------------------------
# interval ranks

def interval_rank_vector(V: Representation) -> RankVector:
    """Ranks of the interval submatrices of the staircase matrix.

    Quivers that are not bipartite go through :func:`psi` first, so the
    result is indexed by intervals of the bipartite reduction.
    """
    if not V.quiver.is_bipartite():
        V = psi(V)
    V = V.full()
    Q, d = V.quiver, V.dims
    L = Q.layout
    VQ = zelevinsky_matrix(V)
    row_start, col_start = {}, {}
    acc = 0
    for z in L.row_vertices():
        row_start[z] = acc
        acc += d[z - 1]
    acc = 0
    for z in L.col_vertices():
        col_start[z] = acc
        acc += d[z - 1]
    vals = []
    for J in all_intervals(Q.n):
        if len(J) == 1:
            vals.append(0)
            continue
        rows = [i for z in J.vertices() if z in row_start
                for i in range(row_start[z], row_start[z] + d[z - 1])]
        cols = [j for z in J.vertices() if z in col_start
                for j in range(col_start[z], col_start[z] + d[z - 1])]
        vals.append(rank(VQ.submatrix(rows, cols)))
    return RankVector(Q.n, tuple(vals))


def ranks_of_multiplicities(m: MultiplicityVector) -> RankVector:
    """Interval ranks of a bipartite direct sum: ``r_J = sum_K m_K floor(|J & K| / 2)``."""
    n = m.n
    vals = []
    supp = m.support()
    for J in all_intervals(n):
        s = 0
        for K, v in supp.items():
            lo, hi = max(J.lo, K.lo), min(J.hi, K.hi)
            if hi >= lo:
                s += v * ((hi - lo + 1) // 2)
        vals.append(s if len(J) > 1 else 0)
    return RankVector(n, tuple(vals))


@lru_cache(maxsize=None)
def _rank_system(n: int) -> tuple[tuple[Interval, ...], tuple[tuple[Fraction, ...], ...]]:
    """Inverse of the square system relating multiplicities to (ranks, dims)."""
    ivs = all_intervals(n)
    rows = []
    for J in ivs:
        if len(J) == 1:
            z = J.lo
            rows.append([int(z in K) for K in ivs])
        else:
            rows.append([max(0, min(J.hi, K.hi) - max(J.lo, K.lo) + 1) // 2 for K in ivs])
    size = len(ivs)
    m = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(size)]
         for i, r in enumerate(rows)]
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c] != 0), None)
        if piv is None:
            raise AssertionError("rank system is singular")
        m[c], m[piv] = m[piv], m[c]
        pc = m[c][c]
        m[c] = [x / pc for x in m[c]]
        for i in range(size):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(ivs), tuple(tuple(r[size:]) for r in m)


def _solve_bipartite(n: int, dims: Sequence[int], r: RankVector) -> MultiplicityVector:
    ivs, inv = _rank_system(n)
    rhs = [dims[J.lo - 1] if len(J) == 1 else r[J] for J in ivs]
    vals = []
    for row in inv:
        x = sum((a * b for a, b in zip(row, rhs)), Fraction(0))
        if x.denominator != 1 or x < 0:
            raise QuiverError("rank data is inconsistent: no nonnegative integer multiplicities")
        vals.append(int(x))
    return MultiplicityVector(n, tuple(vals))


def lift_multiplicities(m: MultiplicityVector, red: BipartiteReduction) -> MultiplicityVector:
    return MultiplicityVector.from_mapping(
        red.target.n, {red.lift_interval(K): v for K, v in m.support().items()})


def push_multiplicities(mt: MultiplicityVector, red: BipartiteReduction) -> MultiplicityVector | None:
    out = {}
    for L, v in mt.support().items():
        K = red.push_interval(L)
        if K is None:
            return None
        out[K] = v
    return MultiplicityVector.from_mapping(red.source.n, out)


def multiplicities_from_ranks(Q: SymQuiverA, dims: Sequence[int], r: RankVector) -> MultiplicityVector:
    """Recover Krull-Schmidt multiplicities from interval ranks.

    The square linear system (ranks of non-singleton intervals plus one
    dimension equation per vertex) is solved exactly.
    """
    dims = check_dims(Q, dims)
    if Q.is_bipartite():
        if r.n != Q.n:
            raise QuiverError(f"rank vector is for {r.n} vertices, quiver has {Q.n}")
        m = _solve_bipartite(Q.n, dims, r)
    else:
        red = bipartite_reduce(Q, dims)
        if r.n != red.target.n:
            raise QuiverError(
                f"rank vector must be indexed by the {red.target.n}-vertex bipartite reduction")
        mt = _solve_bipartite(red.target.n, red.dims, r)
        m = push_multiplicities(mt, red)
        if m is None:
            raise QuiverError("rank data is not full rank on the contracted arrows")
    m.validate(Q, dims)
    return m


# ---------------------------------------------------------------------------
# canonical representatives

def _summands(m: MultiplicityVector, epsilon: int):
    """Summand list in canonical order and the tau-partner of each summand."""
    n = m.n
    summands = [(J, c) for J, v in m.items() for c in range(v)]
    index = {s: i for i, s in enumerate(summands)}
    partner = []
    for J, c in summands:
        tJ = J.tau(n)
        if tJ != J:
            partner.append(index[(tJ, c)])
        elif epsilon == 1:
            partner.append(index[(J, c)])
        else:
            partner.append(index[(J, c ^ 1)])
    return summands, partner


def _star_vectors(slots: list[int], partner: list[int], epsilon: int) -> dict[int, list[int]]:
    """Vectors ``u_s`` with ``u_t^T Omega u_s != 0`` exactly when ``t`` is the partner of ``s``."""
    b = len(slots)
    pairs, singles = [], []
    seen = set()
    for s in slots:
        if s in seen:
            continue
        t = partner[s]
        seen.update((s, t))
        (singles if t == s else pairs).append((s, t))
    u: dict[int, list[int]] = {}

    def e(*ks):
        v = [0] * b
        for k, sign in ks:
            v[k] += sign
        return v

    if epsilon == 1:
        hyper = [(i, b - 1 - i) for i in range(b // 2)]
        it = iter(hyper)
        for s, t in pairs:
            i, j = next(it)
            u[s], u[t] = e((i, 1)), e((j, 1))
        for a in range(0, len(singles) - 1, 2):
            i, j = next(it)
            s, t = singles[a][0], singles[a + 1][0]
            u[s], u[t] = e((i, 1), (j, 1)), e((i, 1), (j, -1))
        if len(singles) % 2:
            u[singles[-1][0]] = e((b // 2, 1))
    else:
        for k, (s, t) in enumerate(pairs):
            u[s], u[t] = e((2 * k, 1)), e((2 * k + 1, 1))
    return u


def rep_from_multiplicities(Q: SymQuiverA, dims: Sequence[int], m: MultiplicityVector,
                            epsilon: int | None = None) -> Representation:
    """A symmetric point isomorphic to the direct sum of ``m(J)`` copies of each ``I_J``."""
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    dims = check_dims(Q, dims)
    m.validate(Q, dims)
    n, eps = Q.n, Q.epsilon
    summands, partner = _summands(m, eps)
    basis = {z: [s for s, (J, _) in enumerate(summands) if z in J] for z in range(1, n + 1)}
    pos = {z: {s: i for i, s in enumerate(basis[z])} for z in basis}
    star = Q.fixed_vertex
    u = _star_vectors(basis[star], partner, eps) if star is not None else {}
    omega = vertex_form(Q, dims, star) if star is not None else None

    mats: dict[int, IntMatrix] = {}
    for e in Q.edges:
        kind = Q.edge_kind(e)
        if kind == "negative":
            continue
        h, t = Q.head(e), Q.tail(e)
        rows, cols = dims[h - 1], dims[t - 1]
        M = [[0] * cols for _ in range(rows)]
        if kind == "fixed":
            # rows/columns at vertex e+1 are indexed by the dual basis of vertex e
            lo = e
            for s in basis[lo]:
                t_s = partner[s]
                if e + 1 not in summands[s][0] or s > t_s:
                    continue
                i, j = pos[lo][s], pos[lo][t_s]
                M[i][j] = 1
                M[j][i] = eps if i != j else 1
        elif star in (h, t):
            other = t if h == star else h
            for s in basis[other]:
                if star not in summands[s][0]:
                    continue
                i = pos[other][s]
                if h == star:
                    for r, x in enumerate(u[s]):
                        M[r][i] = x
                else:
                    vec = u[partner[s]]
                    row = [sum(vec[a] * omega[a, c] for a in range(cols)) for c in range(cols)]
                    M[i] = row
        else:
            for s in basis[t]:
                if s in pos[h]:
                    M[pos[h][s]][pos[t][s]] = 1
        mats[e] = IntMatrix.from_rows(M, cols=cols)
    return Representation.symmetric(Q, dims, mats)


# ---------------------------------------------------------------------------
# orbit enumeration

def _enumerate_direct(Q: SymQuiverA, dims: Sequence[int]) -> list[MultiplicityVector]:
    """Backtracking over one representative per ``{J, tau J}`` pair; singletons absorb the rest."""
    n, eps = Q.n, Q.epsilon
    free = [J for J in all_intervals(n) if len(J) > 1 and J <= J.tau(n)]
    out: list[MultiplicityVector] = []
    remaining = list(dims)
    chosen: dict[Interval, int] = {}

    def rec(k: int):
        if k == len(free):
            m = dict(chosen)
            for z in range(1, n + 1):
                if remaining[z - 1] < 0:
                    return
                m[Interval(z, z)] = remaining[z - 1]
            mv = MultiplicityVector.from_mapping(n, {**m, **{J.tau(n): v for J, v in m.items()}})
            if eps == -1 and Q.fixed_vertex is not None:
                if mv[(Q.fixed_vertex, Q.fixed_vertex)] % 2:
                    return
            out.append(mv)
            return
        J = free[k]
        tJ = J.tau(n)
        verts = list(J.vertices()) + ([] if tJ == J else list(tJ.vertices()))
        cap = min(remaining[z - 1] // verts.count(z) for z in set(verts))
        step = 2 if (eps == -1 and tJ == J) else 1
        for v in range(0, cap + 1, step):
            for z in verts:
                remaining[z - 1] -= v
            chosen[J] = v
            rec(k + 1)
            for z in verts:
                remaining[z - 1] += v
        chosen.pop(J, None)

    rec(0)
    out.sort(key=lambda mv: mv.values)
    return out


def enumerate_symmetric_orbits(Q: SymQuiverA, dims: Sequence[int],
                               epsilon: int | None = None) -> list[MultiplicityVector]:
    """One multiplicity vector per orbit, in lexicographic order of the value tuples.

    A quiver that is not bipartite is handled through its bipartite
    reduction: orbits there are kept when they have full rank on every
    contracted arrow, then pushed back to intervals of ``Q``.
    """
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    dims = check_dims(Q, dims)
    if Q.is_bipartite():
        return _enumerate_direct(Q, dims)
    red = bipartite_reduce(Q, dims)
    out = []
    for mt in _enumerate_direct(red.target, red.dims):
        r = ranks_of_multiplicities(mt)
        if all(r[(c, c + 1)] == red.dims[c - 1] for c in red.contracted):
            m = push_multiplicities(mt, red)
            assert m is not None
            out.append(m)
    out.sort(key=lambda mv: mv.values)
    return out


def orbit_rank_vector(Q: SymQuiverA, dims: Sequence[int], m: MultiplicityVector) -> RankVector:
    """Rank vector of an orbit straight from its multiplicities (no matrices involved)."""
    if Q.is_bipartite():
        return ranks_of_multiplicities(m)
    red = bipartite_reduce(Q, dims)
    return ranks_of_multiplicities(lift_multiplicities(m, red))


__all__ += ["orbit_rank_vector", "push_multiplicities"]
