from fractions import Fraction as Fr

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from enrichcat.linalg import (DimensionError, Matrix, format_scalar, inverse, is_invertible,
                              nullspace, rank, scalar, solve)

# frozen from sympy: A.inv(), B.nullspace(), A.solve([1, 2, 3])
A = Matrix.from_rows([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
A_INV = [[Fr(11, 18), Fr(-2, 9), Fr(1, 18)], [Fr(-2, 9), Fr(4, 9), Fr(-1, 9)], [Fr(1, 18), Fr(-1, 9), Fr(5, 18)]]
B = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])


def test_frozen_inverse():
    assert [list(r) for r in inverse(A).entries] == A_INV


def test_frozen_rank_and_nullspace():
    assert rank(B) == 2
    (k,) = nullspace(B)
    # sympy gives (-1, -1, 1); any nonzero multiple spans the same line
    assert k[2] != 0 and [x / k[2] for x in k] == [-1, -1, 1]


def test_frozen_solve():
    assert solve(A, [1, 2, 3]) == (Fr(1, 3), Fr(1, 3), Fr(2, 3))


def test_inconsistent_system():
    assert solve(B, [1, 0, 0]) is None


def test_scalar_parsing():
    assert scalar("3/4") == Fr(3, 4)
    assert scalar(2) == Fr(2)
    assert format_scalar(Fr(-1, 2)) == "-1/2"
    assert format_scalar(Fr(5)) == "5"


def test_shape_errors():
    with pytest.raises(DimensionError):
        A @ Matrix.from_rows([[1, 2]])
    with pytest.raises(DimensionError):
        A.apply([1, 2])


small = st.integers(min_value=-4, max_value=4)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_agrees_with_sympy(rows):
    M, S = Matrix.from_rows(rows), sp.Matrix(rows)
    assert rank(M) == S.rank()
    assert is_invertible(M) == (S.det() != 0)
    if is_invertible(M):
        oracle = S.inv()
        assert [list(r) for r in inverse(M).entries] == [
            [Fr(int(oracle[i, j].p), int(oracle[i, j].q)) for j in range(S.cols)] for i in range(S.rows)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_product_is_associative_with_identity(pair):
    X, Y = (Matrix.from_rows(r) for r in pair)
    n = X.rows
    assert Matrix.identity(n) @ X == X == X @ Matrix.identity(n)
    assert (X @ Y).transpose() == Y.transpose() @ X.transpose()


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), st.lists(small, min_size=n, max_size=n))))
def test_solve_and_nullspace(data):
    rows, b = data
    M = Matrix.from_rows(rows)
    x = solve(M, b)
    if x is not None:
        assert M.apply(x) == tuple(Fr(v) for v in b)
    for k in nullspace(M):
        assert not any(M.apply(k))
    assert rank(M) + len(nullspace(M)) == M.cols
