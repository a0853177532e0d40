"""Degeneration posets of symmetric orbits and verification of the orbit dictionary.

Orbits are ordered by rank dominance: ``O1 <= O2`` when every interval rank
of ``O1`` is at most the matching rank of ``O2``.  The dictionary sends an
orbit to its symmetric Zelevinsky permutation and should be an
order-reversing bijection onto the image set.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from ._parallel import pmap
from .linalg import IntMatrix, block_rank_matrix, nw_rank_matrix, partial_sums, rank
from .perms import Permutation, bruhat_leq
from .quiver import QuiverError, SymQuiverA, bipartite_reduce, check_dims
from .reps import (
    MultiplicityVector, RankVector, enumerate_symmetric_orbits, interval_rank_vector,
    multiplicities_from_ranks, orbit_rank_vector, psi, rep_from_multiplicities,
    sym_zelevinsky_map,
)
from .zelevinsky import (
    block_structure, image_set, sym_zelevinsky_permutation, v_max, v_square,
    zelevinsky_permutation,
)

__all__ = [
    "OrbitNode", "OrbitPoset", "VerificationReport",
    "degeneration_poset", "transitive_reduction", "p_orbit_leq",
    "verify_dictionary", "export_poset", "DEFAULT_MAX_SIZE",
]

DEFAULT_MAX_SIZE = 12


@dataclass(frozen=True)
class OrbitNode:
    id: int
    multiplicities: MultiplicityVector
    ranks: RankVector
    vperm: Permutation          # symmetric Zelevinsky permutation
    zperm: Permutation          # ordinary Zelevinsky permutation (before alpha)


@dataclass(frozen=True)
class OrbitPoset:
    quiver: SymQuiverA
    dims: tuple[int, ...]
    nodes: tuple[OrbitNode, ...]
    leq: tuple[tuple[bool, ...], ...]
    hasse: tuple[tuple[int, int], ...]     # (lower, upper) cover pairs

    def __len__(self) -> int:
        return len(self.nodes)

    def minimum(self) -> int | None:
        n = len(self.nodes)
        found = [i for i in range(n) if all(self.leq[i][j] for j in range(n))]
        return found[0] if len(found) == 1 else None

    def maximum(self) -> int | None:
        n = len(self.nodes)
        found = [j for j in range(n) if all(self.leq[i][j] for i in range(n))]
        return found[0] if len(found) == 1 else None

    def is_partial_order(self) -> bool:
        n, L = len(self.nodes), self.leq
        if not all(L[i][i] for i in range(n)):
            return False
        for i in range(n):
            for j in range(n):
                if i != j and L[i][j] and L[j][i]:
                    return False
                if L[i][j] and not all(L[i][k] for k in range(n) if L[j][k]):
                    return False
        return True


def transitive_reduction(leq: Sequence[Sequence[bool]]) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)`` of a finite partial order given as a relation matrix."""
    n = len(leq)
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or not leq[i][j]:
                continue
            if not any(k not in (i, j) and leq[i][k] and leq[k][j] for k in range(n)):
                out.append((i, j))
    return out


def _orbit_data(Q: SymQuiverA, dims: tuple[int, ...], m: MultiplicityVector):
    W = rep_from_multiplicities(Q, dims, m)
    return W, interval_rank_vector(W), zelevinsky_permutation(W), sym_zelevinsky_permutation(W)


def degeneration_poset(Q: SymQuiverA, dims: Sequence[int], epsilon: int | None = None) -> OrbitPoset:
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    dims = check_dims(Q, dims)
    orbits = enumerate_symmetric_orbits(Q, dims)
    data = pmap(lambda m: _orbit_data(Q, dims, m), orbits)
    nodes = tuple(OrbitNode(i, m, r, ve, v) for i, (m, (_, r, v, ve)) in enumerate(zip(orbits, data)))
    leq = tuple(tuple(a.ranks.leq(b.ranks) for b in nodes) for a in nodes)
    return OrbitPoset(Q, dims, nodes, leq, tuple(transitive_reduction(leq)))


def _check_form(M: IntMatrix, name: str) -> int:
    if not M.is_square():
        raise QuiverError(f"{name} is not square")
    if M.is_symmetric():
        eps = 1
    elif M.is_skew_symmetric():
        eps = -1
    else:
        raise QuiverError(f"{name} is neither symmetric nor skew-symmetric")
    if rank(M) != M.rows:
        raise QuiverError(f"{name} is singular")
    return eps


def p_orbit_leq(M1: IntMatrix, M2: IntMatrix, blocks: Sequence[int]) -> bool:
    """Whether the orbit of ``M1`` lies in the closure of the orbit of ``M2``.

    Both must be invertible and of the same symmetry type; the test compares
    northwest ranks at every pair of block boundaries.
    """
    if M1.shape != M2.shape:
        raise QuiverError(f"shape mismatch: {M1.shape} vs {M2.shape}")
    if _check_form(M1, "first matrix") != _check_form(M2, "second matrix"):
        raise QuiverError("matrices have different symmetry types")
    C = partial_sums(blocks)
    if (C[-1] if C else 0) != M1.rows:
        raise QuiverError(f"block sizes {list(blocks)} do not sum to {M1.rows}")
    r1, r2 = nw_rank_matrix(M1), nw_rank_matrix(M2)
    return all(r1.r(i, j) <= r2.r(i, j) for i in C for j in C)


# ---------------------------------------------------------------------------
# verification

@dataclass
class VerificationReport:
    instance: str
    orbit_count: int = 0
    image_size: int = 0
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    info: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and not self.failures

    def record(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.checks[name] = self.checks.get(name, True) and passed
        if not passed and witness:
            self.failures.append(f"{name}: {witness}")

    def summary(self) -> str:
        if self.ok:
            return f"{self.orbit_count} orbits, image verified"
        bad = [k for k, v in self.checks.items() if not v]
        return f"{self.orbit_count} orbits, FAILED: {', '.join(bad)}"

    def lines(self) -> list[str]:
        out = [f"instance {self.instance}", f"orbits {self.orbit_count}", f"image {self.image_size}"]
        out += [f"check {k} {'pass' if v else 'FAIL'}" for k, v in self.checks.items()]
        out += [f"failure {f}" for f in self.failures]
        out += [f"info {i}" for i in self.info]
        out.append(self.summary())
        return out


def verify_dictionary(Q: SymQuiverA, dims: Sequence[int], epsilon: int | None = None,
                      max_size: int | None = DEFAULT_MAX_SIZE) -> VerificationReport:
    """Check the orbit/permutation dictionary on one instance.

    Failures are recorded in the report with a witness rather than raised.
    """
    if epsilon is not None and epsilon != Q.epsilon:
        raise QuiverError(f"epsilon {epsilon} does not match the quiver's {Q.epsilon}")
    dims = check_dims(Q, dims)
    red = None if Q.is_bipartite() else bipartite_reduce(Q, dims)
    T, dt = (Q, dims) if red is None else (red.target, red.dims)
    bs = block_structure(T, dt)
    size = sum(bs.sizes)
    if size == 0:
        raise QuiverError("dimension vector is zero; there is nothing to verify")
    if max_size is not None and size > max_size:
        raise QuiverError(f"instance has 2d = {size}, above the configured bound {max_size}")
    rep = VerificationReport(f"{Q.describe()} d={list(dims)}")
    P = degeneration_poset(Q, dims)
    nodes = P.nodes
    rep.orbit_count = len(nodes)
    eps = Q.epsilon

    # ranks: matrices vs multiplicity formula, and back to multiplicities
    for nd in nodes:
        expected = orbit_rank_vector(Q, dims, nd.multiplicities)
        rep.record("rank_vector", nd.ranks == expected,
                   f"orbit {nd.id}: computed {nd.ranks}, expected {expected}")
        try:
            back = multiplicities_from_ranks(Q, dims, nd.ranks)
            rep.record("round_trip", back == nd.multiplicities,
                       f"orbit {nd.id}: {nd.multiplicities} -> {back}")
        except QuiverError as ex:
            rep.record("round_trip", False, f"orbit {nd.id}: {ex}")

    # permutation type
    for nd in nodes:
        good = nd.vperm.is_involution() and (eps == 1 or not nd.vperm.fixed_points())
        rep.record("involution_type", good, f"orbit {nd.id}: v = {nd.vperm}")

    # (a) injective
    seen: dict[Permutation, int] = {}
    for nd in nodes:
        if nd.vperm in seen:
            rep.record("injective", False, f"orbits {seen[nd.vperm]} and {nd.id} both map to {nd.vperm}")
        seen.setdefault(nd.vperm, nd.id)
    rep.record("injective", True)

    # (b) order reversing on all pairs
    for a in nodes:
        for b in nodes:
            lhs = P.leq[a.id][b.id]
            rhs = bruhat_leq(b.vperm, a.vperm)
            if lhs != rhs:
                rep.record("order_reversing", False,
                           f"orbits {a.id} <= {b.id} is {lhs} but {a.vperm} >= {b.vperm} is {rhs}")
    rep.record("order_reversing", True)

    # (c) image
    img = image_set(Q, dims)
    rep.image_size = len(img)
    got = sorted(seen)
    missing = sorted(set(img) - set(got))
    extra = sorted(set(got) - set(img))
    rep.record("image", not missing and not extra,
               f"missing {[str(u) for u in missing]}, extra {[str(u) for u in extra]}")

    # (d) block-rank fidelity and the Bruhat interval
    top, bottom = v_square(size // 2), v_max(Q, dims)
    zetas = []
    for nd in nodes:
        W = rep_from_multiplicities(Q, dims, nd.multiplicities)
        Wb = W if red is None else psi(W, red)
        z = sym_zelevinsky_map(Wb)
        rz = block_rank_matrix(z, bs.sizes, bs.cols)
        rv = block_rank_matrix(nd.vperm.matrix(), bs.sizes, bs.cols)
        rep.record("block_rank_fidelity", rz == rv, f"orbit {nd.id}: {rz} vs {rv}")
        rep.record("bruhat_interval", bruhat_leq(bottom, nd.vperm) and bruhat_leq(nd.vperm, top),
                   f"orbit {nd.id}: {nd.vperm} not in [{bottom}, {top}]")
        zetas.append(z)

    # P-orbit closure order on Zelevinsky matrices matches degeneration order
    for a in nodes:
        for b in nodes:
            lhs = p_orbit_leq(zetas[a.id], zetas[b.id], bs.sizes)
            if lhs != P.leq[a.id][b.id]:
                rep.record("p_orbit_order", False, f"orbits {a.id}, {b.id}")
    rep.record("p_orbit_order", True)

    # informational: do covers map to covers?
    vset = [nd.vperm for nd in nodes]
    bruhat_rel = [[bruhat_leq(vset[j], vset[i]) for j in range(len(vset))] for i in range(len(vset))]
    dual_covers = set(transitive_reduction(bruhat_rel))
    if set(P.hasse) == dual_covers:
        rep.info.append("covers map to covers")
    else:
        rep.info.append(f"cover mismatch: {sorted(set(P.hasse) ^ dual_covers)}")
    return rep


# ---------------------------------------------------------------------------
# export

def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_poset(p: OrbitPoset, format: str = "json") -> str:
    """Render a poset as a DOT digraph (cover edges point upward) or as JSON."""
    fmt = format.lower()
    if fmt == "dot":
        lines = ["digraph orbits {", "  rankdir=BT;", "  node [shape=box];"]
        for nd in p.nodes:
            label = f"{nd.vperm}\\n{_dot_escape(str(nd.ranks))}"
            lines.append(f'  n{nd.id} [label="{label}"];')
        for a, b in p.hasse:
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "quiver": {
                "vertices": p.quiver.n,
                "arrows": [{"from": t, "to": h} for t, h in p.quiver.arrows()],
                "epsilon": p.quiver.epsilon,
                "dims": list(p.dims),
            },
            "nodes": [{"id": nd.id, "vperm": str(nd.vperm), "zperm": str(nd.zperm),
                       "ranks": nd.ranks.to_json(),
                       "multiplicities": {k: v for k, v in nd.multiplicities.to_json().items() if v}}
                      for nd in p.nodes],
            "covers": [[a, b] for a, b in p.hasse],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown poset format {format!r}; use 'dot' or 'json'")
