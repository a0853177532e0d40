"""Exact integer linear algebra.

Everything here works over arbitrary-precision Python integers, so ranks are
ranks over the rationals with no rounding anywhere.  Rank tables are indexed
from 1 to match the usual northwest-rank conventions; a prefix with zero rows
or zero columns has rank 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix", "RankMatrix",
    "rank", "nw_rank_matrix", "block_rank_matrix", "partial_sums",
    "solve_rational", "block_matrix", "inverse",
]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entries length {len(self.entries)} != rows*cols = {self.rows * self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self.entries[i * self.cols + j]
                               for j in range(self.cols) for i in range(self.rows)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        bt = other.T
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                c = bt.row(j)
                out.append(sum(a * b for a, b in zip(r, c)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> IntMatrix:
        rows, cols = list(rows), list(cols)
        return IntMatrix(len(rows), len(cols),
                         tuple(self.entries[i * self.cols + j] for i in rows for j in cols))

    def northwest(self, i: int, j: int) -> IntMatrix:
        return self.submatrix(range(i), range(j))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_skew_symmetric(self) -> bool:
        return self.is_square() and self == -self.T

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


def block_matrix(blocks: Sequence[Sequence[IntMatrix]]) -> IntMatrix:
    """Assemble a matrix from a grid of blocks with compatible shapes."""
    heights = [row[0].rows for row in blocks]
    widths = [b.cols for b in blocks[0]]
    for row, h in zip(blocks, heights):
        if len(row) != len(widths):
            raise ValueError("ragged block grid")
        for b, w in zip(row, widths):
            if b.shape != (h, w):
                raise ValueError("incompatible block shapes")
    out = []
    for row, h in zip(blocks, heights):
        for i in range(h):
            for b in row:
                out.extend(b.row(i))
    return IntMatrix(sum(heights), sum(widths), tuple(out))


def _content(v: list[int]) -> int:
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def rank(M: IntMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    >>> rank(IntMatrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]]))
    2
    """
    a = [list(M.row(i)) for i in range(M.rows)]
    nrows, ncols = M.rows, M.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                # Sylvester identity guarantees exact division
                row_i[j] = (p * row_i[j] - aic * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r


@dataclass(frozen=True)
class RankMatrix:
    """Northwest rank table; ``r(i, j)`` is 1-based, with ``r(0, j) == r(i, 0) == 0``."""
    size: int
    table: tuple[tuple[int, ...], ...]

    def r(self, i: int, j: int) -> int:
        if i == 0 or j == 0:
            return 0
        return self.table[i - 1][j - 1]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.table]

    def check_invariants(self) -> None:
        """Raise AssertionError if the table is not a valid northwest rank table."""
        n = self.size
        for i in range(n + 1):
            for j in range(n + 1):
                v = self.r(i, j)
                assert 0 <= v <= min(i, j), (i, j, v)
                if i < n:
                    assert v <= self.r(i + 1, j), (i, j)
                if j < n:
                    assert v <= self.r(i, j + 1), (i, j)
                if i < n and j < n:
                    step = self.r(i + 1, j + 1) - self.r(i + 1, j) - self.r(i, j + 1) + v
                    assert step in (0, 1), (i, j, step)


def nw_rank_matrix(M: IntMatrix) -> RankMatrix:
    """All northwest ranks ``rank M[:i, :j]`` of a square matrix.

    Rows are inserted one at a time into an echelon basis whose pivots are
    leftmost nonzero positions.  After inserting rows ``1..i``, the rank of
    the first ``j`` columns equals the number of pivots at or left of ``j``.
    """
    if not M.is_square():
        raise ValueError(f"nw_rank_matrix needs a square matrix, got {M.shape}")
    n = M.rows
    basis: dict[int, list[int]] = {}  # pivot column -> reduced row
    table = []
    pivot_count = [0] * (n + 1)  # pivots in column c (0-based), cumulated below
    for i in range(n):
        v = list(M.row(i))
        for c in range(n):
            if v[c] == 0:
                continue
            b = basis.get(c)
            if b is None:
                g = _content(v)
                if g > 1:
                    v = [x // g for x in v]
                basis[c] = v
                pivot_count[c] += 1
                break
            p, vc = b[c], v[c]
            v = [p * x - vc * y for x, y in zip(v, b)]
        row, acc = [], 0
        for c in range(n):
            acc += pivot_count[c]
            row.append(acc)
        table.append(tuple(row))
    return RankMatrix(n, tuple(table))


def partial_sums(blocks: Sequence[int]) -> list[int]:
    out, s = [], 0
    for b in blocks:
        if b < 0:
            raise ValueError("block sizes must be nonnegative")
        s += b
        out.append(s)
    return out


def block_rank_matrix(M: IntMatrix, blocks: Sequence[int],
                      col_blocks: Sequence[int] | None = None) -> list[list[int]]:
    """Ranks of the unions of the first ``p`` block rows and first ``q`` block columns."""
    if col_blocks is None:
        col_blocks = blocks
    rs, cs = partial_sums(blocks), partial_sums(col_blocks)
    if (rs[-1] if rs else 0) != M.rows or (cs[-1] if cs else 0) != M.cols:
        raise ValueError(f"block sizes {list(blocks)}/{list(col_blocks)} do not match "
                         f"matrix shape {M.shape}")
    if M.is_square() and list(blocks) == list(col_blocks):
        nw = nw_rank_matrix(M)
        return [[nw.r(i, j) for j in cs] for i in rs]
    return [[rank(M.northwest(i, j)) for j in cs] for i in rs]


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve a square nonsingular system exactly over Q."""
    n = len(A)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[c], m[piv] = m[piv], m[c]
        pc = m[c][c]
        m[c] = [x / pc for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n] for row in m]


def inverse(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a square matrix whose inverse is integral."""
    if not M.is_square():
        raise ValueError("only square matrices can be inverted")
    n = M.rows
    m = [[Fraction(x) for x in M.row(i)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        pc = m[c][c]
        m[c] = [x / pc for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    out = []
    for row in m:
        for x in row[n:]:
            if x.denominator != 1:
                raise ValueError("inverse is not integral")
            out.append(int(x))
    return IntMatrix(n, n, tuple(out))
