"""Symmetric type A quivers, intervals, and the bipartite reduction.

Vertices are labeled ``1..n`` from left to right and edge ``i`` joins
vertices ``i`` and ``i + 1``.  Each edge carries a direction: ``"R"`` means
the arrow points toward the larger label (``i -> i+1``), ``"L"`` toward the
smaller one.  The involution is ``tau(i) = n + 1 - i``; because it reverses
arrows, edge ``i`` and edge ``n - i`` must carry the *same* letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

from .linalg import IntMatrix

__all__ = [
    "QuiverError", "SymQuiverA", "Interval", "BipartiteLayout", "BipartiteReduction",
    "make_quiver", "check_dims", "all_intervals", "intervals_with_tau",
    "fixed_form", "fixed_form_inverse", "bipartite_reduce",
]


class QuiverError(ValueError):
    """Raised when quiver or dimension data violates an invariant."""


class Interval(NamedTuple):
    lo: int
    hi: int

    def __contains__(self, z) -> bool:  # type: ignore[override]
        return self.lo <= z <= self.hi

    def __len__(self) -> int:  # type: ignore[override]
        return self.hi - self.lo + 1

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def tau(self, n: int) -> Interval:
        return Interval(n + 1 - self.hi, n + 1 - self.lo)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def all_intervals(n: int) -> list[Interval]:
    """Every interval of an ``n``-vertex path, sorted by ``(lo, hi)``."""
    return [Interval(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def _normalize_dir(d) -> str:
    s = str(d).strip().upper()
    if s in ("R", "RIGHT", ">", "->"):
        return "R"
    if s in ("L", "LEFT", "<", "<-"):
        return "L"
    raise QuiverError(f"arrow direction must be Left or Right, got {d!r}")


@dataclass(frozen=True)
class SymQuiverA:
    n: int
    arrow_dirs: tuple[str, ...]
    epsilon: int

    # --- involution -------------------------------------------------------
    def tau(self, z: int) -> int:
        return self.n + 1 - z

    def tau_edge(self, e: int) -> int:
        return self.n - e

    # --- arrows -----------------------------------------------------------
    def head(self, e: int) -> int:
        return e + 1 if self.arrow_dirs[e - 1] == "R" else e

    def tail(self, e: int) -> int:
        return e if self.arrow_dirs[e - 1] == "R" else e + 1

    @property
    def edges(self) -> range:
        return range(1, self.n)

    def arrows(self) -> list[tuple[int, int]]:
        """``(tail, head)`` for every edge in order."""
        return [(self.tail(e), self.head(e)) for e in self.edges]

    # --- positive / fixed / negative partition ----------------------------
    @property
    def fixed_vertex(self) -> int | None:
        return (self.n + 1) // 2 if self.n % 2 else None

    @property
    def fixed_edge(self) -> int | None:
        return self.n // 2 if self.n % 2 == 0 else None

    def edge_kind(self, e: int) -> str:
        t = self.tau_edge(e)
        return "fixed" if t == e else ("positive" if e < t else "negative")

    def vertex_kind(self, z: int) -> str:
        t = self.tau(z)
        return "fixed" if t == z else ("positive" if z < t else "negative")

    @property
    def positive_edges(self) -> list[int]:
        return [e for e in self.edges if self.edge_kind(e) == "positive"]

    @property
    def negative_edges(self) -> list[int]:
        return [e for e in self.edges if self.edge_kind(e) == "negative"]

    # --- shape ------------------------------------------------------------
    def is_sink(self, z: int) -> bool:
        return all(self.head(e) == z for e in (z - 1, z) if 1 <= e < self.n)

    def is_source(self, z: int) -> bool:
        return all(self.tail(e) == z for e in (z - 1, z) if 1 <= e < self.n)

    def is_bipartite(self) -> bool:
        return all(self.is_sink(z) or self.is_source(z) for z in range(1, self.n + 1))

    @cached_property
    def layout(self) -> BipartiteLayout:
        return BipartiteLayout.of(self)

    def describe(self) -> str:
        parts = []
        for e in self.edges:
            parts.append(f"{self.tail(e)}->{self.head(e)}")
        return f"A{self.n}({', '.join(parts)}; eps={self.epsilon:+d})"


def make_quiver(n: int, arrow_dirs: Sequence, epsilon: int) -> SymQuiverA:
    """Validate orientation data and build a symmetric type A quiver.

    >>> make_quiver(4, "LRL", -1).positive_edges
    [1]
    """
    if not isinstance(n, int) or n < 2:
        raise QuiverError(f"vertex count must be an integer >= 2, got {n!r}")
    if epsilon not in (1, -1):
        raise QuiverError(f"epsilon must be +1 or -1, got {epsilon!r}")
    dirs = tuple(_normalize_dir(d) for d in arrow_dirs)
    if len(dirs) != n - 1:
        raise QuiverError(f"expected {n - 1} arrow directions, got {len(dirs)}")
    for e in range(1, n):
        if dirs[e - 1] != dirs[n - e - 1]:
            raise QuiverError(
                f"orientation is not tau-compatible: edge {e} is {dirs[e - 1]} "
                f"but its tau-image, edge {n - e}, is {dirs[n - e - 1]}")
    return SymQuiverA(n, dirs, epsilon)


def quiver_from_arrows(n: int, arrows: Sequence[tuple[int, int]], epsilon: int) -> SymQuiverA:
    """Build a quiver from ``(from, to)`` pairs, one for each edge."""
    dirs: dict[int, str] = {}
    for a, b in arrows:
        if abs(a - b) != 1 or not (1 <= a <= n and 1 <= b <= n):
            raise QuiverError(f"arrow {a}->{b} does not join adjacent vertices of 1..{n}")
        e = min(a, b)
        if e in dirs:
            raise QuiverError(f"edge {e} ({e}-{e + 1}) has more than one arrow")
        dirs[e] = "R" if b > a else "L"
    missing = [e for e in range(1, n) if e not in dirs]
    if missing:
        raise QuiverError(f"edges without an arrow: {missing}")
    return make_quiver(n, [dirs[e] for e in range(1, n)], epsilon)


def check_dims(Q: SymQuiverA, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(x) for x in dims)
    if len(dims) != Q.n:
        raise QuiverError(f"dimension vector has length {len(dims)}, quiver has {Q.n} vertices")
    if any(x < 0 for x in dims):
        raise QuiverError(f"dimension vector must be nonnegative, got {list(dims)}")
    for z in range(1, Q.n + 1):
        if dims[z - 1] != dims[Q.tau(z) - 1]:
            raise QuiverError(
                f"dimension vector is not symmetric: d({z}) = {dims[z - 1]} "
                f"but d({Q.tau(z)}) = {dims[Q.tau(z) - 1]}")
    fz = Q.fixed_vertex
    if fz is not None and Q.epsilon == -1 and dims[fz - 1] % 2:
        raise QuiverError(
            f"epsilon = -1 needs an even dimension at the fixed vertex {fz}, got {dims[fz - 1]}")
    return dims


def intervals_with_tau(Q: SymQuiverA | int) -> list[tuple[Interval, Interval]]:
    n = Q if isinstance(Q, int) else Q.n
    return [(J, J.tau(n)) for J in all_intervals(n)]


def fixed_form(size: int, epsilon: int) -> IntMatrix:
    """The form used at a tau-fixed vertex.

    ``+1``: antidiagonal ones.  ``-1``: diagonal sum of ``[[0, 1], [-1, 0]]``.
    """
    if epsilon == 1:
        return IntMatrix(size, size, tuple(int(i + j == size - 1)
                                           for i in range(size) for j in range(size)))
    if size % 2:
        raise QuiverError(f"a skew form needs even size, got {size}")

    def entry(i, j):
        if i // 2 != j // 2:
            return 0
        if i % 2 == 0 and j == i + 1:
            return 1
        if i % 2 == 1 and j == i - 1:
            return -1
        return 0
    return IntMatrix(size, size, tuple(entry(i, j) for i in range(size) for j in range(size)))


def fixed_form_inverse(size: int, epsilon: int) -> IntMatrix:
    # J is its own inverse; the standard skew form inverts to its transpose
    return fixed_form(size, epsilon) if epsilon == 1 else fixed_form(size, epsilon).T


@dataclass(frozen=True)
class BipartiteLayout:
    """Canonical ``y``/``x`` labeling of a bipartite quiver.

    ``ys[i]`` is the vertex labeled ``y_i`` (a sink) and ``xs[i - 1]`` the one
    labeled ``x_i`` (a source), for ``0 <= i < k`` and ``1 <= i <= k``.
    """
    k: int
    ys: tuple[int, ...]
    xs: tuple[int, ...]

    @classmethod
    def of(cls, Q: SymQuiverA) -> BipartiteLayout:
        if not Q.is_bipartite():
            raise QuiverError(f"{Q.describe()} is not bipartite")
        N = Q.n
        k = N // 2
        if Q.is_sink(1):
            ys = tuple(2 * i + 1 for i in range(k))
            xs = tuple(2 * i for i in range(1, k + 1))
        else:
            ys = tuple(N - 2 * i for i in range(k))
            xs = tuple(N + 1 - 2 * i for i in range(1, k + 1))
        return cls(k, ys, xs)

    def y(self, i: int) -> int:
        return self.ys[i]

    def x(self, i: int) -> int:
        return self.xs[i - 1]

    def staircase(self) -> list[tuple[str, int, int, int]]:
        """``(name, edge, y-index, x-index)`` in the order alpha1, beta1, alpha2, ..., alpha_k."""
        out = []
        for i in range(1, self.k + 1):
            y, x = self.y(i - 1), self.x(i)
            out.append((f"alpha{i}", min(x, y), i - 1, i))
            if i < self.k:
                y2 = self.y(i)
                out.append((f"beta{i}", min(x, y2), i, i))
        return out

    def row_vertices(self) -> list[int]:
        return list(self.ys)

    def col_vertices(self) -> list[int]:
        return [self.x(i) for i in range(self.k, 0, -1)]

    def zeta_row_vertices(self) -> list[int]:
        return self.row_vertices() + self.col_vertices()

    def zeta_col_vertices(self) -> list[int]:
        return self.col_vertices() + self.row_vertices()

    def zeta_blocks(self, dims: Sequence[int]) -> tuple[list[int], list[int]]:
        rows = [dims[z - 1] for z in self.zeta_row_vertices()]
        cols = [dims[z - 1] for z in self.zeta_col_vertices()]
        return rows, cols


@dataclass(frozen=True)
class BipartiteReduction:
    source: SymQuiverA
    target: SymQuiverA
    nu: tuple[int, ...]              # nu[v - 1] is the Q-vertex of Q~-vertex v
    contracted: tuple[int, ...]      # edges of Q~ that get contracted
    dims: tuple[int, ...]            # lifted dimension vector
    split: tuple[tuple[int, int, int], ...]  # (z, z_head, z_tail) for each split vertex
    edge_map: tuple[int, ...]        # edge_map[e - 1] is the Q~-edge carrying Q-edge e

    @property
    def is_identity(self) -> bool:
        return not self.contracted

    def lift_interval(self, K: Interval) -> Interval:
        pre = [v for v in range(1, self.target.n + 1) if self.nu[v - 1] in K]
        return Interval(pre[0], pre[-1])

    def push_interval(self, L: Interval) -> Interval | None:
        """The Q-interval ``K`` with ``lift_interval(K) == L``, or ``None``."""
        K = Interval(self.nu[L.lo - 1], self.nu[L.hi - 1])
        return K if self.lift_interval(K) == L else None

    def contract(self) -> SymQuiverA:
        """Contract the marked arrows; the result should equal the source quiver."""
        dirs = []
        for e in range(1, self.target.n):
            if e in self.contracted:
                continue
            dirs.append(self.target.arrow_dirs[e - 1])
        n = self.target.n - len(self.contracted)
        return make_quiver(n, dirs, self.target.epsilon)


def bipartite_reduce(Q: SymQuiverA, dims: Sequence[int] | None = None) -> BipartiteReduction:
    """Split every pass-through vertex into a sink and a source.

    A vertex ``z`` on a path ``x -> z -> y`` becomes ``x, z_h, z_t, y`` with the
    new arrow ``z_t -> z_h``; on ``x <- z <- y`` it becomes ``x, z_t, z_h, y``.
    """
    if dims is None:
        dims = (0,) * Q.n
    dims = check_dims(Q, dims)
    nu: list[int] = []
    dirs: list[str] = []
    contracted: list[int] = []
    split = []
    edge_map = []
    for z in range(1, Q.n + 1):
        through = not (Q.is_sink(z) or Q.is_source(z))
        if z > 1:
            dirs.append(Q.arrow_dirs[z - 2])
            edge_map.append(len(nu))
        if not through:
            nu.append(z)
            continue
        v = len(nu) + 1
        nu.extend([z, z])
        if Q.arrow_dirs[z - 1] == "R":      # x -> z -> y: order z_h, z_t
            dirs.append("L")
            split.append((z, v, v + 1))
        else:                                # x <- z <- y: order z_t, z_h
            dirs.append("R")
            split.append((z, v + 1, v))
        contracted.append(v)
    target = make_quiver(len(nu), dirs, Q.epsilon)
    assert target.is_bipartite()
    return BipartiteReduction(
        source=Q, target=target, nu=tuple(nu), contracted=tuple(contracted),
        dims=tuple(dims[z - 1] for z in nu), split=tuple(split), edge_map=tuple(edge_map))
