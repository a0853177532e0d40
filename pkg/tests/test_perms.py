import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquiver.linalg import nw_rank_matrix, rank
from symquiver.perms import (Permutation, PermutationError, alpha, bruhat_leq, diagonal_fixed_points,
                             diagrams, essential_set, fpf_involutions, involutions,
                             is_min_double_coset_rep, parse_permutation, rothe_diagram,
                             signed_matrix)
from symquiver.zelevinsky import in_J
from oracles import bruhat_upsets, double_factorial, length

P = parse_permutation


def all_perms(n):
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def test_parse_and_print():
    assert str(P("21563478")) == "21563478"
    assert P("2 1 3") == P("2,1,3") == P([2, 1, 3])
    w = P("10 1 2 3 4 5 6 7 8 9")
    assert w.n == 10 and str(w) == "10,1,2,3,4,5,6,7,8,9"
    for bad in ["", "112", "1 3", "a b"]:
        with pytest.raises(PermutationError):
            P(bad)


def test_basic_group_operations():
    w = P("351624")
    assert w.inverse().compose(w) == Permutation.identity(6)
    assert w.is_involution() and not w.fixed_points()
    assert w.length() == length(w)


def test_bruhat_small_cases():
    assert bruhat_leq(P("12"), P("21"))
    assert not bruhat_leq(P("21"), P("12"))
    with pytest.raises(PermutationError):
        bruhat_leq(P("12"), P("123"))
    e = Permutation.identity(4)
    assert all(bruhat_leq(e, w) for w in all_perms(4))


def test_bruhat_matches_reflection_order_on_s4():
    up = bruhat_upsets(4)
    for u, v in product(up, repeat=2):
        assert bruhat_leq(Permutation(u), Permutation(v)) == (v in up[u])


def test_bruhat_matches_reflection_order_on_random_s6_pairs():
    up = bruhat_upsets(6)
    keys = list(up)
    rng = random.Random(20261015)
    for _ in range(10_000):
        u, v = rng.choice(keys), rng.choice(keys)
        assert bruhat_leq(Permutation(u), Permutation(v)) == (v in up[u])


@pytest.mark.parametrize("n", range(1, 6))
def test_bruhat_is_a_partial_order(n):
    S = all_perms(n)
    leq = {(a, b): bruhat_leq(a, b) for a in S for b in S}
    for a in S:
        assert leq[a, a]
    for a, b in product(S, repeat=2):
        if a != b and leq[a, b]:
            assert not leq[b, a]
            assert a.length() < b.length()
    if n <= 4:
        for a, b, c in product(S, repeat=3):
            if leq[a, b] and leq[b, c]:
                assert leq[a, c]


def test_essential_sets_of_21563487():
    dg = diagrams(P("21563487"))
    assert dg.E_plus == {(1, 1), (4, 4), (7, 7)}
    assert dg.E_minus == {(4, 3)}


def test_diagram_small_cases():
    dg = diagrams(P("1234"))
    assert all(not s for s in dg)
    dg = diagrams(P("21"))
    assert dg.D == {(1, 1)} == dg.D_plus and dg.D_minus == frozenset()
    with pytest.raises(PermutationError):
        diagrams(P("231"))
    assert rothe_diagram(P("231")) == {(1, 1), (2, 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_diagram_containments(n):
    for w in involutions(n):
        dg = diagrams(w)
        assert len(dg.D) == w.length()
        assert dg.E_plus <= dg.D_plus <= dg.D
        assert dg.E_minus <= dg.D_minus <= dg.D_plus
        assert dg.E <= dg.D and dg.E == essential_set(dg.D)


def test_coset_minimality_examples():
    assert is_min_double_coset_rep(P("21563478"), [1, 3, 1, 3])
    assert is_min_double_coset_rep(Permutation.identity(5), [1] * 5)
    assert not is_min_double_coset_rep(P("213"), [3])
    with pytest.raises(PermutationError):
        is_min_double_coset_rep(P("213"), [1, 1])


def _young_subgroup(blocks):
    ranges, start = [], 0
    for b in blocks:
        ranges.append(list(range(start + 1, start + b + 1)))
        start += b
    elems = [()]
    for r in ranges:
        elems = [e + p for e in elems for p in permutations(r)]
    return [Permutation(e) for e in elems]


@pytest.mark.parametrize("blocks", [(1, 2), (2, 2), (1, 2, 1), (2, 1, 1), (3, 1), (1, 3)])
def test_coset_minimality_by_brute_force(blocks):
    n = sum(blocks)
    W = _young_subgroup(blocks)
    for w in all_perms(n):
        coset = {a.compose(w).compose(b) for a in W for b in W}
        shortest = min(x.length() for x in coset)
        minimal = [x for x in coset if x.length() == shortest]
        assert len(minimal) == 1
        assert is_min_double_coset_rep(w, blocks) == (w == minimal[0])


def test_alpha_examples():
    assert alpha(P("21563478"), [1, 3, 1, 3]) == P("21563487")
    assert alpha(P("1234"), [4]) == P("2143")
    assert alpha(P("3412"), [2, 2]) == P("3412")
    with pytest.raises(PermutationError, match="odd"):
        alpha(P("123"), [3])
    with pytest.raises(PermutationError):
        alpha(P("231"), [3])


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_alpha_injective_and_fixed_point_free_on_J(n):
    invs = involutions(n)
    for blocks in compositions(n):
        J = [u for u in invs if in_J(u, blocks)]
        images = [alpha(u, blocks) for u in J]
        assert len(set(images)) == len(images)
        for u, a in zip(J, images):
            assert a.is_fixed_point_free_involution()
            ranges, start = [], 0
            for b in blocks:
                ranges.append(range(start + 1, start + b + 1))
                start += b
            for i in range(1, n + 1):
                if a(i) != u(i):
                    assert any(i in r and a(i) in r for r in ranges)


def test_signed_matrix_examples():
    assert signed_matrix(P("21"), -1).tolist() == [[0, 1], [-1, 0]]
    w = P("351624")
    assert signed_matrix(w, 1) == w.matrix()
    M = signed_matrix(w, -1)
    neg = {(i + 1, j + 1) for i, row in enumerate(M.tolist()) for j, x in enumerate(row) if x == -1}
    assert neg == {(3, 1), (5, 2), (6, 4)}
    with pytest.raises(PermutationError):
        signed_matrix(P("213"), -1)


@pytest.mark.parametrize("n", range(1, 8))
def test_signed_matrices_are_forms_with_same_ranks(n):
    for u in involutions(n):
        for eps in (1, -1):
            if eps == -1 and u.fixed_points():
                continue
            M = signed_matrix(u, eps)
            assert M.is_symmetric() if eps == 1 else M.is_skew_symmetric()
            assert rank(M) == n
            assert nw_rank_matrix(M) == nw_rank_matrix(u.matrix())


def test_fpf_involution_examples():
    assert [str(w) for w in fpf_involutions(2)] == ["21"]
    assert [str(w) for w in involutions(2)] == ["12", "21"]
    assert [str(w) for w in fpf_involutions(4)] == ["2143", "3412", "4321"]
    with pytest.raises(PermutationError):
        fpf_involutions(3)


@pytest.mark.parametrize("n", range(0, 9))
def test_involution_counts(n):
    brute = [w for w in all_perms(n) if w.is_involution()] if n <= 7 else None
    invs = involutions(n)
    assert invs == sorted(invs)
    if brute is not None:
        assert invs == sorted(brute)
    if n % 2 == 0:
        assert len(fpf_involutions(n)) == double_factorial(n - 1)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 7)), st.permutations(range(1, 7)))
def test_interval_restricted_enumeration(a, b):
    lo, hi = Permutation(tuple(a)), Permutation(tuple(b))
    if not bruhat_leq(lo, hi):
        lo, hi = hi, lo
    expected = [w for w in involutions(6) if bruhat_leq(lo, w) and bruhat_leq(w, hi)]
    if bruhat_leq(lo, hi):
        assert involutions(6, restrict_to=(lo, hi)) == expected
        assert fpf_involutions(6, restrict_to=(lo, hi)) == [w for w in expected if not w.fixed_points()]


def test_diagonal_fixed_points():
    assert diagonal_fixed_points(P("21563478"), [1, 3, 1, 3]) == [[], [], [], [7, 8]]
