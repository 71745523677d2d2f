from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from liequad.linalg import (
    Matrix,
    Subspace,
    eigen_structure,
    minimal_polynomial,
    nullspace,
    rank,
    rref,
    solve_linear,
    vec,
    vec_is_zero,
)
from liequad.scalars import EXACT, BackendMismatch, complex_backend


def M(rows):
    return Matrix.from_rows(EXACT, rows)


def test_solve_identity():
    assert solve_linear(Matrix.identity(EXACT, 3), [1, 2, 3]) == vec(EXACT, [1, 2, 3])


def test_solve_inconsistent_rank1():
    assert solve_linear(M([[1, 1], [1, 1]]), [1, 2]) is None


def test_solve_diagonal_inverse():
    x = solve_linear(M([[2, 0], [0, 3]]), [1, 1])
    assert x == vec(EXACT, [Fraction(1, 2), Fraction(1, 3)])


def test_solve_backend_mismatch():
    a = Matrix.identity(EXACT, 2)
    with pytest.raises(BackendMismatch):
        solve_linear(a, [0.5 + 0j, 1j])


def test_nullspace_zero_map():
    assert len(nullspace(Matrix.zeros(EXACT, 3, 3))) == 3


def test_nullspace_injective():
    assert nullspace(Matrix.identity(EXACT, 3)) == []


def test_nullspace_row():
    # oracle: the returned vectors are independent and annihilated by A
    a = M([[1, 1, 0]])
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert vec_is_zero(EXACT, a.apply(v))
    assert Subspace.span(EXACT, basis, 3).dim == 2


small = st.integers(-5, 5)


@settings(max_examples=120, deadline=None)
@given(
    n=st.integers(1, 6),
    m=st.integers(1, 6),
    data=st.data(),
)
def test_rank_nullity(n, m, data):
    rows = [[data.draw(small) for _ in range(m)] for _ in range(n)]
    a = M(rows)
    assert rank(a) + len(nullspace(a)) == a.cols


@settings(max_examples=80, deadline=None)
@given(n=st.integers(1, 5), data=st.data())
def test_solve_then_substitute(n, data):
    rows = [[data.draw(small) for _ in range(n)] for _ in range(n)]
    b = [data.draw(small) for _ in range(n)]
    a = M(rows)
    x = solve_linear(a, b)
    if x is not None:
        assert all(r == v for r, v in zip(a.apply(x), vec(EXACT, b)))


def test_rref_is_canonical():
    a = M([[2, 4], [1, 2]])
    red, pivots = rref(a)
    assert pivots == (0,)
    assert red.entries[0] == vec(EXACT, [1, 2])


def test_subspace_equality_echelon():
    s1 = Subspace.span(EXACT, [[1, 1, 0], [0, 2, 0]], 3)
    s2 = Subspace.span(EXACT, [[3, 0, 0], [5, 7, 0]], 3)
    assert s1 == s2
    assert s1.contains([4, -9, 0])
    assert not s1.contains([0, 0, 1])


def test_subspace_intersection():
    s1 = Subspace.span(EXACT, [[1, 0, 0], [0, 1, 0]], 3)
    s2 = Subspace.span(EXACT, [[0, 1, 1], [1, 0, 0]], 3)
    inter = s1.intersect(s2)
    assert inter.dim == 1
    assert inter.contains([1, 0, 0])


def test_eigen_jordan_block():
    e = eigen_structure(M([[0, 1], [0, 0]]))
    assert e.is_nilpotent and not e.is_semisimple


def test_eigen_diagonal():
    e = eigen_structure(M([[1, 0], [0, -1]]))
    assert not e.is_nilpotent and e.is_semisimple


def test_eigen_unipotent():
    # oracle: minimal polynomial of [[1,1],[0,1]] is (x-1)^2 = x^2 - 2x + 1
    a = M([[1, 1], [0, 1]])
    assert minimal_polynomial(a) == list(vec(EXACT, [1, -2, 1]))
    e = eigen_structure(a)
    assert not e.is_nilpotent and not e.is_semisimple


def test_eigen_rejects_large():
    with pytest.raises(ValueError):
        eigen_structure(Matrix.identity(EXACT, 5))


def test_eigen_float_backend():
    cb = complex_backend()
    a = Matrix.from_rows(cb, [[0.0, 1.0], [0.0, 0.0]])
    e = eigen_structure(a)
    assert e.is_nilpotent and not e.is_semisimple
    b = Matrix.from_rows(cb, [[1.0, 0.0], [0.0, -1.0]])
    e = eigen_structure(b)
    assert not e.is_nilpotent and e.is_semisimple


def test_solve_float_backend_within_tol():
    cb = complex_backend(1e-9)
    a = Matrix.from_rows(cb, [[3.0, 1.0], [1.0, 2.0]])
    b = [1.0, 7.0]
    x = solve_linear(a, b)
    assert x is not None
    res = [abs(r - v) for r, v in zip(a.apply(x), [complex(v) for v in b])]
    assert all(r <= 1e-9 for r in res)


def test_float_rank_respects_tolerance():
    cb = complex_backend(1e-9)
    a = Matrix.from_rows(cb, [[1.0, 0.0], [0.0, 1e-12]])
    assert rank(a) == 1
