"""Permutations, Bruhat order, Rothe diagrams, and involution enumeration.

A permutation ``v`` of ``1..n`` is stored in one-line notation; its matrix
has a 1 at ``(i, v(i))``.  ``rank_table(v)[i][j]`` counts the 1s weakly
northwest of ``(i, j)`` and Bruhat order is read off those tables:
``u <= v`` exactly when ``u``'s table dominates ``v``'s entrywise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, NamedTuple, Sequence

from .linalg import IntMatrix

__all__ = [
    "Permutation", "Diagrams", "PermutationError",
    "parse_permutation", "bruhat_leq", "rank_table",
    "rothe_diagram", "essential_set", "diagrams",
    "is_min_double_coset_rep", "alpha", "signed_matrix",
    "involutions", "fpf_involutions", "diagonal_fixed_points",
]


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        n = len(self.one_line)
        if sorted(self.one_line) != list(range(1, n + 1)):
            raise PermutationError(f"{list(self.one_line)} is not a permutation of 1..{n}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.one_line)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: Permutation) -> Permutation:
        """``(self o other)(i) = self(other(i))``."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.n + 1) if self(i) == i]

    def is_fixed_point_free_involution(self) -> bool:
        return self.is_involution() and not self.fixed_points()

    def length(self) -> int:
        w = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if w[i] > w[j])

    def matrix(self) -> IntMatrix:
        n = self.n
        e = [0] * (n * n)
        for i, v in enumerate(self.one_line):
            e[i * n + v - 1] = 1
        return IntMatrix(n, n, tuple(e))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))

    def __format__(self, spec: str) -> str:
        return format(str(self), spec)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def parse_permutation(text: str | Sequence[int] | Permutation) -> Permutation:
    """Parse one-line notation.

    Separators (commas or whitespace) are optional for ``n <= 9`` and
    required once a value has two digits.

    >>> parse_permutation("21563487").one_line
    (2, 1, 5, 6, 3, 4, 8, 7)
    >>> str(parse_permutation("10,9,8,7,6,5,4,3,2,1"))
    '10,9,8,7,6,5,4,3,2,1'
    """
    if isinstance(text, Permutation):
        return text
    if not isinstance(text, str):
        return Permutation(tuple(int(x) for x in text))
    s = text.strip().strip("[]()")
    if not s:
        raise PermutationError("empty permutation")
    if re.search(r"[,\s]", s):
        parts = [p for p in re.split(r"[,\s]+", s) if p]
    else:
        if not s.isdigit():
            raise PermutationError(f"cannot parse permutation {text!r}")
        parts = list(s)
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise PermutationError(f"cannot parse permutation {text!r}") from None
    return Permutation(vals)


@lru_cache(maxsize=65536)
def _rank_table(w: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(w)
    rows = []
    prev = [0] * n
    for i in range(n):
        cur = prev[:]
        for j in range(w[i] - 1, n):
            cur[j] += 1
        rows.append(tuple(cur))
        prev = cur
    return tuple(rows)


def rank_table(v: Permutation) -> tuple[tuple[int, ...], ...]:
    """Northwest rank table, ``table[i-1][j-1] = r_{i,j}(v)``."""
    return _rank_table(v.one_line)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """``u <= v`` in Bruhat order (the identity is the minimum).

    >>> bruhat_leq(parse_permutation("12"), parse_permutation("21"))
    True
    """
    if u.n != v.n:
        raise PermutationError(f"size mismatch: {u.n} vs {v.n}")
    ru, rv = _rank_table(u.one_line), _rank_table(v.one_line)
    return all(a >= b for ra, rb in zip(ru, rv) for a, b in zip(ra, rb))


# ---------------------------------------------------------------------------
# diagrams

Cell = tuple[int, int]


class Diagrams(NamedTuple):
    D: frozenset
    D_plus: frozenset
    D_minus: frozenset
    E: frozenset
    E_plus: frozenset
    E_minus: frozenset


def rothe_diagram(w: Permutation) -> frozenset:
    inv = w.inverse()
    n = w.n
    return frozenset((i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                     if w(i) > j and inv(j) > i)


def essential_set(cells: Iterable[Cell]) -> frozenset:
    """Cells with neither the cell below nor the cell to the right in the set."""
    cells = frozenset(cells)
    return frozenset((i, j) for i, j in cells
                     if (i + 1, j) not in cells and (i, j + 1) not in cells)


def diagrams(w: Permutation) -> Diagrams:
    """Rothe diagram, its parts weakly/strictly below the diagonal, and their essential sets."""
    if not w.is_involution():
        raise PermutationError(f"{w} is not an involution")
    D = rothe_diagram(w)
    Dp = frozenset(c for c in D if c[0] >= c[1])
    Dm = frozenset(c for c in D if c[0] > c[1])
    return Diagrams(D, Dp, Dm, essential_set(D), essential_set(Dp), essential_set(Dm))


# ---------------------------------------------------------------------------
# block structure

def _block_ranges(blocks: Sequence[int], n: int) -> list[range]:
    if any(b < 0 for b in blocks) or sum(blocks) != n:
        raise PermutationError(f"block sizes {list(blocks)} do not sum to {n}")
    ends = list(accumulate(blocks))
    return [range(e - b + 1, e + 1) for b, e in zip(blocks, ends)]


def is_min_double_coset_rep(w: Permutation, blocks: Sequence[int]) -> bool:
    """1s run northwest to southeast inside every block row and block column."""
    ranges = _block_ranges(blocks, w.n)
    inv = w.inverse()
    for r in ranges:
        vals = [w(i) for i in r]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
        vals = [inv(j) for j in r]
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
    return True


def diagonal_fixed_points(u: Permutation, blocks: Sequence[int]) -> list[list[int]]:
    """Fixed points of ``u`` grouped by diagonal block (they are the diagonal 1s)."""
    return [[i for i in r if u(i) == i] for r in _block_ranges(blocks, u.n)]


def alpha(u: Permutation, blocks: Sequence[int]) -> Permutation:
    """Swap consecutive diagonal 1s of each diagonal block into 2x2 antidiagonal blocks.

    >>> str(alpha(parse_permutation("21563478"), [1, 3, 1, 3]))
    '21563487'
    """
    if not u.is_involution():
        raise PermutationError(f"{u} is not an involution")
    w = list(u.one_line)
    for fps in diagonal_fixed_points(u, blocks):
        if len(fps) % 2:
            raise PermutationError(
                f"{u} has an odd number ({len(fps)}) of diagonal 1s in a diagonal block")
        for a, b in zip(fps[::2], fps[1::2]):
            w[a - 1], w[b - 1] = b, a
    return Permutation(tuple(w))


def signed_matrix(u: Permutation, epsilon: int) -> IntMatrix:
    """Permutation matrix of ``u`` with the 1s strictly below the diagonal multiplied by epsilon."""
    if epsilon not in (1, -1):
        raise PermutationError("epsilon must be +1 or -1")
    if not u.is_involution():
        raise PermutationError(f"{u} is not an involution")
    if epsilon == -1 and u.fixed_points():
        raise PermutationError(f"{u} has fixed points, so its signed matrix cannot be skew")
    n = u.n
    e = [0] * (n * n)
    for i in range(1, n + 1):
        j = u(i)
        e[(i - 1) * n + j - 1] = epsilon if i > j else 1
    return IntMatrix(n, n, tuple(e))


# ---------------------------------------------------------------------------
# involution enumeration

def _in_bounds(rows: list[int], i: int, lo_tab, hi_tab, n: int) -> bool:
    """Check rank bounds on the completed rows ``1..i``.

    ``lo`` is a Bruhat lower bound (its table is an upper bound on ranks) and
    ``hi`` an upper bound (its table is a lower bound).
    """
    counts = [0] * n
    for r in range(i):
        counts[rows[r] - 1] += 1
    acc = 0
    lo_row = lo_tab[i - 1] if lo_tab else None
    hi_row = hi_tab[i - 1] if hi_tab else None
    for j in range(n):
        acc += counts[j]
        if lo_row is not None and acc > lo_row[j]:
            return False
        if hi_row is not None and acc < hi_row[j]:
            return False
    return True


def _generate(n: int, fpf: bool, lo: Permutation | None,
              hi: Permutation | None) -> Iterator[Permutation]:
    w = [0] * n
    lo_tab = _rank_table(lo.one_line) if lo else None
    hi_tab = _rank_table(hi.one_line) if hi else None
    bounded = lo is not None or hi is not None

    def settled_prefix(start: int) -> int:
        k = start
        while k < n and w[k]:
            k += 1
        return k

    def check_through(a: int, b: int) -> bool:
        # rows a+1..b are now all determined
        for i in range(a + 1, b + 1):
            if not _in_bounds(w, i, lo_tab, hi_tab, n):
                return False
        return True

    def rec(i: int):
        if i == n:
            yield Permutation(tuple(w))
            return
        if w[i]:
            yield from rec(i + 1)
            return
        choices = [] if fpf else [i]
        choices += [j for j in range(i + 1, n) if not w[j]]
        for j in sorted(choices):
            w[i], w[j] = j + 1, i + 1
            k = settled_prefix(i)
            if not bounded or check_through(i, k):
                yield from rec(i + 1)
            w[i] = 0
            w[j] = 0

    yield from rec(0)


def involutions(n: int, restrict_to: tuple[Permutation, Permutation] | None = None,
                fixed_point_free: bool = False) -> list[Permutation]:
    """All involutions of ``1..n`` (optionally within a Bruhat interval), in lexicographic order."""
    if n < 0:
        raise PermutationError("n must be nonnegative")
    if fixed_point_free and n % 2:
        raise PermutationError(f"there are no fixed-point-free involutions of odd size {n}")
    lo = hi = None
    if restrict_to is not None:
        lo, hi = (parse_permutation(p) for p in restrict_to)
        if lo.n != n or hi.n != n:
            raise PermutationError("interval endpoints have the wrong size")
    out = list(_generate(n, fixed_point_free, lo, hi))
    out.sort()
    return out


def fpf_involutions(n: int, restrict_to: tuple[Permutation, Permutation] | None = None) -> list[Permutation]:
    """Fixed-point-free involutions; see :func:`involutions`.

    >>> [str(w) for w in fpf_involutions(4)]
    ['2143', '3412', '4321']
    """
    return involutions(n, restrict_to, fixed_point_free=True)
