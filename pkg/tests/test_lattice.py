import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from symquandle.lattice import (
    Lattice, echelon, invariant_factors, kernel, matmul, smith_normal_form,
)


def matrices(max_rows=5, max_cols=5, bound=6):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n),
                min_size=m, max_size=m)))


def _oracle(a):
    fs = [abs(int(f)) for f in sympy_factors(Matrix(a), domain=ZZ)]
    return [f for f in fs if f]


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_invariant_factors_match_sympy(a):
    assert invariant_factors(a) == _oracle(a)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_smith_transforms(a):
    m, n = len(a), len(a[0])
    snf = smith_normal_form(a, want_left=True, want_right=True)
    d = matmul(matmul(snf.left, a), snf.right)
    for i in range(m):
        for j in range(n):
            want = snf.diagonal[i] if i == j and i < len(snf.diagonal) else 0
            assert d[i][j] == want
    for x, y in zip(snf.diagonal, snf.diagonal[1:]):
        assert y % x == 0
    # unimodular transforms
    assert abs(Matrix(snf.left).det()) == 1
    assert abs(Matrix(snf.right).det()) == 1


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_saturated_basis(a):
    n = len(a[0])
    ker = kernel(a, n)
    for v in ker:
        assert all(sum(r[j] * v[j] for j in range(n)) == 0 for r in a)
    assert len(ker) == n - Matrix(a).rank()
    if ker:
        # a lattice basis of the kernel has gcd of maximal minors equal to 1
        assert _oracle(ker) == [1] * len(ker)


@settings(max_examples=80, deadline=None)
@given(matrices(), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_lattice_membership(a, coeffs):
    n = len(a[0])
    lat = Lattice(a, n)
    v = [sum(c * r[j] for c, r in zip(coeffs, a)) for j in range(n)]
    z = lat.coordinates(v)
    assert z is not None
    back = [sum(c * b[j] for c, b in zip(z, lat.basis)) for j in range(n)]
    assert back == v


def test_lattice_rejects_non_member():
    lat = Lattice([[2, 0], [0, 3]], 2)
    assert [2, 3] in lat
    assert [1, 0] not in lat
    assert lat.coordinates([4, 3]) == [2, 1]


def test_echelon_pivots_positive():
    basis, rest = echelon([[0, -2, 4], [0, 3, 1], [0, 0, 0]])
    assert rest == []
    assert all(r[next(j for j, x in enumerate(r) if x)] > 0 for r in basis)


@pytest.mark.parametrize("a, factors", [
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[1, 0], [0, 0]], [1]),
    ([[0, 0]], []),
])
def test_known_smith_forms(a, factors):
    assert invariant_factors(a) == factors
