import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquiver.linalg import IntMatrix, nw_rank_matrix, rank
from symquiver.quiver import Interval, QuiverError, bipartite_reduce, make_quiver
from symquiver.reps import (IntervalFunction, MultiplicityVector, Representation, RankVector,
                            _enumerate_direct, contract_rep, enumerate_symmetric_orbits,
                            interval_rank_vector, is_symmetric, multiplicities_from_ranks,
                            orbit_rank_vector, psi, ranks_of_multiplicities,
                            rep_from_multiplicities, sym_zelevinsky_map, symmetric_embed, zeta,
                            zelevinsky_matrix)
from oracles import verification_instances, instance_id

A = [[1, 0, 0]]
B = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]


@pytest.fixture
def running():
    Q = make_quiver(4, "LRL", -1)
    d = (1, 3, 3, 1)
    return Q, d, Representation.symmetric(Q, d, {1: A, 2: B})


def mv(n, mapping):
    return MultiplicityVector.from_mapping(n, mapping)


def test_embedding_of_running_example(running):
    Q, d, W = running
    full = symmetric_embed(W)
    assert full.mat(1).tolist() == A
    assert full.mat(2).tolist() == B
    assert full.mat(3).tolist() == [[1], [0], [0]]
    assert is_symmetric(full)


def test_embedding_trivial_cases():
    Q = make_quiver(4, "LRL", 1)
    Z = symmetric_embed(Representation.zero(Q, (2, 1, 1, 2)))
    assert all(Z.mat(e).is_zero() for e in Q.edges)
    Q2 = make_quiver(2, "R", 1)
    V = Representation.symmetric(Q2, (1, 1), {1: [[2]]})
    assert symmetric_embed(V).mat(1).tolist() == [[2]]


def test_fixed_arrow_must_match_sign():
    Q = make_quiver(2, "R", -1)
    with pytest.raises(QuiverError, match="skew"):
        Representation.symmetric(Q, (2, 2), {1: [[0, 1], [1, 0]]})
    with pytest.raises(QuiverError, match="shape"):
        Representation.symmetric(make_quiver(4, "LRL", -1), (1, 3, 3, 1), {1: [[1, 0]]})


def test_zelevinsky_matrices_of_running_example(running):
    Q, d, W = running
    assert zelevinsky_matrix(W).tolist() == [
        [0, 1, 0, 0], [1, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 0]]
    S = zelevinsky_matrix(W, signed=True)
    assert S.is_skew_symmetric()
    z, ze = zeta(W), sym_zelevinsky_map(W)
    assert ze.is_skew_symmetric() and not z.is_skew_symmetric()
    assert rank(ze) == 8
    assert nw_rank_matrix(z) == nw_rank_matrix(ze)


def test_zelevinsky_small_cases():
    Q = make_quiver(2, "R", 1)
    assert zelevinsky_matrix(Representation.symmetric(Q, (1, 1), {1: [[1]]})).tolist() == [[1]]
    assert sym_zelevinsky_map(Representation.zero(Q, (1, 1))).tolist() == [[0, 1], [1, 0]]
    Z = Representation.zero(make_quiver(4, "LRL", 1), (1, 2, 2, 1))
    assert zelevinsky_matrix(Z).is_zero()


def test_interval_ranks_of_running_example(running):
    Q, d, W = running
    r = interval_rank_vector(W)
    assert r[(1, 2)] == 1 and r[(2, 3)] == 2 and r[(1, 3)] == 2
    assert r[(1, 1)] == 0
    assert interval_rank_vector(Representation.zero(Q, d)) == RankVector(4, (0,) * 10)


def test_running_example_is_enumerated(running):
    Q, d, W = running
    r = interval_rank_vector(W)
    hits = [m for m in enumerate_symmetric_orbits(Q, d) if orbit_rank_vector(Q, d, m) == r]
    assert len(hits) == 1
    assert multiplicities_from_ranks(Q, d, r) == hits[0]


def test_rep_from_multiplicities_examples():
    Q = make_quiver(2, "R", 1)
    V = rep_from_multiplicities(Q, (2, 2), mv(2, {(1, 2): 2}))
    assert V.mat(1).tolist() == [[1, 0], [0, 1]]
    Qm = make_quiver(2, "R", -1)
    V = rep_from_multiplicities(Qm, (2, 2), mv(2, {(1, 2): 2}))
    assert V.mat(1).tolist() == [[0, 1], [-1, 0]]
    V = rep_from_multiplicities(Q, (2, 2), mv(2, {(1, 1): 2, (2, 2): 2}))
    assert V.mat(1).is_zero()


def test_multiplicities_from_ranks_examples():
    Q = make_quiver(2, "R", 1)
    assert multiplicities_from_ranks(Q, (2, 2), RankVector(2, (0, 0, 0))) == mv(2, {(1, 1): 2, (2, 2): 2})
    r = RankVector.from_mapping(2, {(1, 2): 1})
    assert multiplicities_from_ranks(Q, (2, 2), r) == mv(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1})
    with pytest.raises(QuiverError):
        multiplicities_from_ranks(Q, (2, 2), RankVector.from_mapping(2, {(1, 2): 3}))


def test_multiplicity_validation():
    Q = make_quiver(2, "R", -1)
    with pytest.raises(QuiverError, match="even"):
        mv(2, {(1, 2): 1, (1, 1): 1, (2, 2): 1}).validate(Q, (2, 2))
    with pytest.raises(QuiverError, match="dimension"):
        mv(2, {(1, 2): 2}).validate(Q, (3, 3))
    with pytest.raises(QuiverError, match="symmetry"):
        mv(4, {(1, 2): 1, (3, 3): 1, (4, 4): 1}).validate(make_quiver(4, "LRL", 1), (1, 1, 1, 1))


@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("eps", [1, -1])
def test_a2_orbit_counts_match_rank_classification(k, eps):
    # symmetric k x k matrices: one orbit per rank; skew ones: one per even rank
    Q = make_quiver(2, "R", eps)
    orbits = enumerate_symmetric_orbits(Q, (k, k))
    expected = k + 1 if eps == 1 else k // 2 + 1
    assert len(orbits) == expected
    ranks = sorted(orbit_rank_vector(Q, (k, k), m)[(1, 2)] for m in orbits)
    assert ranks == list(range(0, k + 1, 1 if eps == 1 else 2))


def test_a2_unit_dims():
    assert len(enumerate_symmetric_orbits(make_quiver(2, "R", 1), (1, 1))) == 2
    assert len(enumerate_symmetric_orbits(make_quiver(2, "R", -1), (1, 1))) == 1


def test_interval_function_format():
    f = IntervalFunction.from_mapping(3, {(1, 2): 2, (3, 3): 1})
    assert f[Interval(1, 2)] == 2 and f[(2, 2)] == 0
    assert f.to_json()["1-2"] == 2
    assert str(f) == "{[1,2]:2 [3,3]:1}"


def test_indecomposable_ranks_by_hand():
    # I_J has identity maps inside J; rank of the J' submatrix counts arrows of J & J'
    Q = make_quiver(6, "LRLRL", 1)
    for K in [Interval(1, 6), Interval(2, 5), Interval(2, 3), Interval(3, 4)]:
        m = {K: 1, K.tau(6): 1} if K.tau(6) != K else {K: 1}
        for z in range(1, 7):
            m.setdefault(Interval(z, z), 0)
        dims = mv(6, m).dims()
        rest = {Interval(z, z): 0 for z in range(1, 7)}
        M = mv(6, {**rest, **m})
        W = rep_from_multiplicities(Q, dims, M)
        assert interval_rank_vector(W) == ranks_of_multiplicities(M)


CASES = verification_instances() + [
    (make_quiver(4, "LRL", 1), (2, 2, 2, 2)),
    (make_quiver(4, "RLR", -1), (2, 2, 2, 2)),
    (make_quiver(3, "LL", 1), (2, 2, 2)),
    (make_quiver(4, "RRR", 1), (1, 1, 1, 1)),
    (make_quiver(5, "RLLR", -1), (1, 1, 2, 1, 1)),
    (make_quiver(6, "LRLRL", 1), (1, 2, 1, 1, 2, 1)),
]


@pytest.mark.parametrize("inst", CASES, ids=instance_id)
def test_orbit_round_trip(inst):
    Q, d = inst
    orbits = enumerate_symmetric_orbits(Q, d)
    seen = set()
    for m in orbits:
        m.validate(Q, d)
        W = rep_from_multiplicities(Q, d, m)
        r = interval_rank_vector(W)
        assert r == orbit_rank_vector(Q, d, m)
        assert multiplicities_from_ranks(Q, d, r) == m
        assert r not in seen
        seen.add(r)
        pairs = {J: J.tau(r.n) for J in (J for J, _ in r.items())}
        assert all(r[J] == r[tJ] for J, tJ in pairs.items())
        if Q.epsilon == -1:
            assert all(r[J] % 2 == 0 for J, tJ in pairs.items() if J == tJ)


@pytest.mark.parametrize("inst", CASES, ids=instance_id)
def test_reduced_route_matches_direct_enumeration(inst):
    Q, d = inst
    direct = _enumerate_direct(Q, d)
    assert enumerate_symmetric_orbits(Q, d) == direct


@pytest.mark.parametrize("inst", CASES, ids=instance_id)
def test_signed_and_unsigned_zeta_share_nw_ranks(inst):
    Q, d = inst
    for m in enumerate_symmetric_orbits(Q, d):
        W = rep_from_multiplicities(Q, d, m)
        Wb = W if Q.is_bipartite() else psi(W)
        z, ze = zeta(Wb), sym_zelevinsky_map(Wb)
        assert (ze.is_symmetric() if Q.epsilon == 1 else ze.is_skew_symmetric())
        assert nw_rank_matrix(z) == nw_rank_matrix(ze)
        assert rank(ze) == ze.rows


@pytest.mark.parametrize("inst", [c for c in CASES if not c[0].is_bipartite()], ids=instance_id)
def test_psi_contracts_back(inst):
    Q, d = inst
    red = bipartite_reduce(Q, d)
    for m in enumerate_symmetric_orbits(Q, d):
        W = rep_from_multiplicities(Q, d, m)
        Wt = psi(W, red)
        assert Wt.quiver == red.target and Wt.symmetric_point
        assert contract_rep(Wt, red) == symmetric_embed(W)


@st.composite
def symmetric_points(draw):
    Q = draw(st.sampled_from([make_quiver(2, "R", 1), make_quiver(2, "R", -1),
                              make_quiver(4, "LRL", 1), make_quiver(4, "LRL", -1),
                              make_quiver(4, "RLR", 1)]))
    half = draw(st.lists(st.integers(0, 3), min_size=Q.n // 2, max_size=Q.n // 2))
    if Q.epsilon == -1:
        half[-1] = 2 * (half[-1] // 2)
    d = tuple(half + half[::-1])
    mats = {}
    for e in Q.edges:
        kind = Q.edge_kind(e)
        if kind == "negative":
            continue
        r, c = d[Q.head(e) - 1], d[Q.tail(e) - 1]
        vals = draw(st.lists(st.integers(-2, 2), min_size=r * c, max_size=r * c))
        M = IntMatrix.from_rows([vals[i * c:(i + 1) * c] for i in range(r)], cols=c)
        if kind == "fixed":
            M = M + M.T.scale(Q.epsilon)
        mats[e] = M
    return Representation.symmetric(Q, d, mats)


@settings(max_examples=150, deadline=None)
@given(symmetric_points())
def test_random_points_land_on_enumerated_orbits(W):
    Q, d = W.quiver, W.dims
    r = interval_rank_vector(W)
    m = multiplicities_from_ranks(Q, d, r)
    assert m in enumerate_symmetric_orbits(Q, d)
    assert interval_rank_vector(rep_from_multiplicities(Q, d, m)) == r
    z, ze = zeta(W), sym_zelevinsky_map(W)
    assert nw_rank_matrix(z) == nw_rank_matrix(ze)
