import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symquiver.linalg import (IntMatrix, block_matrix, block_rank_matrix, inverse,
                              nw_rank_matrix, partial_sums, rank, solve_rational)
from oracles import fraction_rank, nw_ranks

entries = st.integers(-3, 3)


@st.composite
def matrices(draw, max_n=8, square=False):
    r = draw(st.integers(0, max_n))
    c = r if square else draw(st.integers(0, max_n))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return IntMatrix.from_rows(rows, cols=c)


@st.composite
def skew_matrices(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    upper = draw(st.lists(entries, min_size=n * n, max_size=n * n))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = upper[i * n + j]
            rows[j][i] = -upper[i * n + j]
    return IntMatrix.from_rows(rows)


def test_rank_examples():
    assert rank(IntMatrix.zeros(3, 3)) == 0
    assert rank(IntMatrix.identity(3)) == 3
    assert rank(IntMatrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])) == 2


def test_rank_handles_big_entries():
    M = IntMatrix.from_rows([[10**30, 1], [10**30 + 1, 1]])
    assert rank(M) == 2
    assert rank(IntMatrix.from_rows([[10**30, 2 * 10**30], [3, 6]])) == 1


def test_nw_rank_of_351624():
    P = IntMatrix.from_rows([[1 if j == w - 1 else 0 for j in range(6)] for w in (3, 5, 1, 6, 2, 4)])
    assert nw_rank_matrix(P).tolist() == [
        [0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 2, 2],
        [1, 1, 2, 2, 3, 3],
        [1, 1, 2, 2, 3, 4],
        [1, 2, 3, 3, 4, 5],
        [1, 2, 3, 4, 5, 6],
    ]


@pytest.mark.parametrize("n", [1, 4, 7])
def test_nw_rank_trivial_cases(n):
    assert nw_rank_matrix(IntMatrix.identity(n)).tolist() == [
        [min(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    assert nw_rank_matrix(IntMatrix.zeros(n, n)).tolist() == [[0] * n for _ in range(n)]


def test_block_rank_examples():
    d = 3
    assert block_rank_matrix(IntMatrix.identity(2 * d), [d, d]) == [[d, d], [d, 2 * d]]
    assert partial_sums([1, 3, 1, 3]) == [1, 4, 5, 8]


def test_block_rank_rejects_bad_blocks():
    with pytest.raises(ValueError):
        block_rank_matrix(IntMatrix.identity(3), [1, 1])


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_matches_fraction_oracle(M):
    assert rank(M) == fraction_rank(M.tolist())


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_transpose(M):
    assert rank(M) == rank(M.T)


@settings(max_examples=150, deadline=None)
@given(matrices(square=True))
def test_nw_rank_matrix_invariants(M):
    R = nw_rank_matrix(M)
    R.check_invariants()
    assert R.tolist() == nw_ranks(M)


@settings(max_examples=100, deadline=None)
@given(matrices(square=True))
def test_unit_blocks_equal_nw_ranks(M):
    assert block_rank_matrix(M, [1] * M.rows) == nw_rank_matrix(M).tolist()


@settings(max_examples=150, deadline=None)
@given(skew_matrices())
def test_skew_diagonal_ranks_are_even(M):
    assert M.is_skew_symmetric()
    R = nw_rank_matrix(M)
    assert all(R.r(i, i) % 2 == 0 for i in range(1, M.rows + 1))


def test_matrix_algebra():
    A = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (A @ IntMatrix.identity(2)) == A
    assert (A + (-A)).is_zero()
    assert A.T.tolist() == [[1, 3], [2, 4]]
    assert A.northwest(1, 2).tolist() == [[1, 2]]
    assert block_matrix([[A, IntMatrix.zeros(2, 1)]]).shape == (2, 3)
    with pytest.raises(ValueError):
        A @ IntMatrix.zeros(3, 3)


def test_inverse_and_solve():
    A = IntMatrix.from_rows([[0, 1], [-1, 0]])
    assert inverse(A) == A.T
    assert solve_rational([[2, 0], [0, 4]], [1, 1]) == [pytest.approx(0.5), pytest.approx(0.25)]
    with pytest.raises(ValueError):
        inverse(IntMatrix.zeros(2, 2))
