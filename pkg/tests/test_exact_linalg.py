import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from deligne_simpson import exact_linalg as xl
from deligne_simpson.exact_linalg import RatMatrix

from conftest import random_matrix
from oracles import commutation_system, entrywise_product, minor_rank


def test_rational_strings():
    assert xl.rational_from_str("-3/7") == F(-3, 7)
    assert xl.rational_from_str("5") == F(5)
    assert xl.rational_to_str(F(-3, 7)) == "-3/7"
    assert xl.rational_to_str(F(10, 2)) == "5"
    for bad in ("1.5", "3/-2", "a", "1/0", ""):
        with pytest.raises(ValueError):
            xl.rational_from_str(bad)


def test_rank_examples():
    assert xl.rank(RatMatrix.identity(4)) == 4
    assert xl.rank(RatMatrix.zero(3, 3)) == 0
    assert xl.rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_nullspace_examples():
    assert xl.nullspace_basis(RatMatrix.identity(2)) == []
    assert len(xl.nullspace_basis(RatMatrix.zero(2, 2))) == 2
    basis = xl.nullspace_basis(RatMatrix.from_rows([[1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0, 0] == -v[1, 0] != 0


def test_arithmetic_examples():
    m = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert xl.commutator(RatMatrix.identity(2), m).is_zero()
    assert xl.inverse(RatMatrix.diagonal([2, 3])) == RatMatrix.diagonal([F(1, 2), F(1, 3)])
    with pytest.raises(xl.SingularMatrixError):
        xl.inverse(RatMatrix.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(xl.ShapeMismatchError):
        xl.matmul(RatMatrix.identity(2), RatMatrix.identity(3))


def test_product_of_shipped_quadruple_is_identity():
    # oracle: entrywise multiplication of the (a,1,1)-family matrices with
    # (a,b,c,d) = (2,3,5,1/30), no RatMatrix involved
    a, b, c = F(2), F(3), F(5)
    d = 1 / (a * b * c)
    raw = [
        [[a, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[b, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[c, 0, 1], [0, 1, 0], [0, 0, 1]],
        [[d, -1 / (b * c), -1 / c], [0, 1, 0], [0, 0, 1]],
    ]
    raw = [[[F(x) for x in row] for row in m] for m in raw]
    expected = entrywise_product(raw)
    assert expected == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    got = xl.product([RatMatrix.from_rows(m) for m in raw])
    assert got.is_identity()


def test_vectorize_commutator_map_examples():
    assert xl.vectorize_commutator_map(RatMatrix.diagonal([7, 7])).is_zero()
    assert xl.rank(xl.vectorize_commutator_map(RatMatrix.diagonal([1, 2]))) == 2
    jordan = RatMatrix.from_rows([[5, 1], [0, 5]])
    # oracle: the commutation system built entrywise has nullity 2
    oracle = commutation_system([[F(5), F(1)], [F(0), F(5)]])
    assert 4 - minor_rank(oracle) == 2
    assert xl.nullity(xl.vectorize_commutator_map(jordan)) == 2


def test_vectorization_order_is_row_major():
    rng = random.Random(3)
    a = random_matrix(rng, 3)
    x = random_matrix(rng, 3)
    vec_x = RatMatrix.column(x.entries)
    assert (xl.left_mul_matrix(a) @ vec_x).col(0) == (a @ x).entries
    assert (xl.right_mul_matrix(a) @ vec_x).col(0) == (x @ a).entries
    assert (xl.vectorize_commutator_map(a) @ vec_x).col(0) == xl.commutator(a, x).entries


def test_solve_particular_and_inconsistent():
    a = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    b = RatMatrix.column([1, 2])
    x = xl.solve(a, b)
    assert (a @ x) == b
    with pytest.raises(xl.NoSolutionError):
        xl.solve(a, RatMatrix.column([1, 3]))


def test_json_roundtrip():
    m = RatMatrix.from_rows([[F(1, 2), -2], [0, F(7, 3)]])
    assert m.to_json() == [["1/2", "-2"], ["0", "7/3"]]
    assert RatMatrix.from_json(m.to_json()) == m


small = st.integers(-4, 4)


@st.composite
def matrices(draw, max_dim=4):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = draw(st.lists(small, min_size=rows * cols, max_size=rows * cols))
    return RatMatrix(rows, cols, entries)


@st.composite
def square_matrices(draw, max_dim=4):
    n = draw(st.integers(1, max_dim))
    entries = draw(st.lists(small, min_size=n * n, max_size=n * n))
    return RatMatrix(n, n, entries)


@given(matrices())
def test_rank_bounds_and_minor_oracle(m):
    r = xl.rank(m)
    assert 0 <= r <= min(m.rows, m.cols)
    assert r == minor_rank(m.row_lists())


@st.composite
def square_pairs(draw, max_dim=3):
    n = draw(st.integers(1, max_dim))
    entries = st.lists(small, min_size=n * n, max_size=n * n)
    return RatMatrix(n, n, draw(entries)), RatMatrix(n, n, draw(entries))


@given(square_pairs())
def test_rank_of_product_bound(pair):
    a, b = pair
    assert xl.rank(a @ b) <= min(xl.rank(a), xl.rank(b))


@given(matrices())
def test_nullspace_vectors_are_exact(m):
    basis = xl.nullspace_basis(m)
    assert len(basis) == m.cols - xl.rank(m)
    for v in basis:
        assert (m @ v).is_zero()


@given(square_matrices(), square_matrices())
def test_commutator_properties(a, b):
    assert xl.commutator(a, a).is_zero()
    if a.rows == b.rows:
        assert xl.commutator(a, b).trace() == 0


@given(square_matrices())
def test_inverse_times_self(a):
    try:
        inv = xl.inverse(a)
    except xl.SingularMatrixError:
        assert xl.rank(a) < a.rows
        return
    assert (inv @ a).is_identity()
    assert (a @ inv).is_identity()
