"""Exact linear algebra: RREF, kernels, solving, subspace lattice."""

import pytest
from hypothesis import given, settings, strategies as st

from novikov.fields import QQ, PrimeField
from novikov.linalg import (DimensionMismatch, Matrix, SingularMatrix,
                            Subspace)

F5 = PrimeField(5)


def mat5(draw_rows):
    return Matrix(F5, [[F5(x) for x in row] for row in draw_rows])


small_entries = st.integers(min_value=0, max_value=4)
small_matrix = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(small_entries, min_size=n, max_size=n),
        min_size=1, max_size=4))


@settings(max_examples=60, deadline=None)
@given(rows=small_matrix)
def test_rref_properties(rows):
    m = mat5(rows)
    red, rank = m.rref()
    assert rank <= min(m.rows, m.cols)
    # idempotence and rank stability
    red2, rank2 = red.rref()
    assert red2 == red and rank2 == rank
    # row space is preserved
    assert m.row_space() == red.row_space()


@settings(max_examples=60, deadline=None)
@given(rows=small_matrix)
def test_kernel_and_rank_nullity(rows):
    m = mat5(rows)
    ker = m.kernel()
    assert ker.dim == m.cols - m.rank()
    z = tuple(F5.zero() for _ in range(m.rows))
    for v in ker.basis:
        assert m.apply(v) == z


@settings(max_examples=60, deadline=None)
@given(rows=small_matrix,
       coeffs=st.lists(small_entries, min_size=4, max_size=4))
def test_solve_consistent_system(rows, coeffs):
    m = mat5(rows)
    x = [F5(c) for c in coeffs[:m.cols]]
    rhs = m.apply(x)
    sol = m.solve(list(rhs))
    assert sol is not None
    assert m.apply(sol) == rhs


def test_solve_inconsistent():
    m = Matrix(F5, [[1, 0], [2, 0]])
    assert m.solve([F5(1), F5(1)]) is None


@settings(max_examples=40, deadline=None)
@given(rows=st.lists(st.lists(small_entries, min_size=3, max_size=3),
                     min_size=3, max_size=3))
def test_inverse(rows):
    m = mat5(rows)
    if m.is_invertible():
        assert m.inverse() * m == Matrix.identity(F5, 3)
        assert m * m.inverse() == Matrix.identity(F5, 3)
    else:
        with pytest.raises(SingularMatrix):
            m.inverse()


def test_scalar_multiplication():
    m = Matrix(QQ, [[1, 2], [3, 4]])
    assert m * QQ(2) == Matrix(QQ, [[2, 4], [6, 8]])
    assert 2 * m == m * 2


def test_matrix_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2]]) * Matrix(QQ, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, [[1, 2]]).apply([QQ(1)])


@settings(max_examples=60, deadline=None)
@given(u=small_matrix, w=small_matrix)
def test_subspace_dimension_formula(u, w):
    cols = min(len(u[0]), len(w[0]))
    U = Subspace(F5, cols, [row[:cols] for row in u])
    W = Subspace(F5, cols, [row[:cols] for row in w])
    S = U + W
    I = U.intersect(W)
    assert U.dim + W.dim == S.dim + I.dim
    assert S.contains(U) and S.contains(W)
    assert U.contains(I) and W.contains(I)
    for v in U.basis:
        assert S.member(v)


@settings(max_examples=40, deadline=None)
@given(u=small_matrix)
def test_coordinate_complement_and_quotient_basis(u):
    cols = len(u[0])
    U = Subspace(F5, cols, u)
    C = U.coordinate_complement()
    assert U.dim + C.dim == cols
    assert (U + C).dim == cols
    full = Subspace.full(F5, cols)
    reps = full.quotient_basis(U)
    assert len(reps) == cols - U.dim
    span = Subspace(F5, cols, list(U.basis) + list(reps))
    assert span.dim == cols


def test_subspace_canonical_equality():
    a = Subspace(QQ, 2, [[1, 1], [0, 2]])
    b = Subspace(QQ, 2, [[3, 5], [7, 1]])
    assert a == b  # both are the full plane, same RREF basis
    assert hash(a) == hash(b)
