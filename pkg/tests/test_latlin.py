import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stackyk import latlin
from stackyk.latlin import (
    determinant,
    finite_index_span,
    integer_kernel,
    matmul,
    rational_solve,
    smith_normal_form,
)


def is_snf(S):
    m, n = len(S), len(S[0])
    diag = [S[i][i] for i in range(min(m, n))]
    off = [S[i][j] for i in range(m) for j in range(n) if i != j]
    if any(off) or any(d < 0 for d in diag):
        return False
    nonzero = [d for d in diag if d]
    if diag[: len(nonzero)] != nonzero:
        return False
    return all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


def check_decomposition(A):
    U, S, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == S
    assert determinant(U) in (1, -1)
    assert determinant(V) in (1, -1)
    assert is_snf(S)
    return U, S, V


def test_snf_identity():
    U, S, V = smith_normal_form(((1, 0), (0, 1)))
    assert U == V == S == ((1, 0), (0, 1))


def test_snf_2468():
    A = ((2, 4), (6, 8))
    _, S, _ = check_decomposition(A)
    # d1 = gcd of the entries, d1 * d2 = |det|
    d1 = gcd(gcd(2, 4), gcd(6, 8))
    d2 = abs(2 * 8 - 4 * 6) // d1
    assert (S[0][0], S[1][1]) == (d1, d2) == (2, 4)


def test_snf_zero():
    U, S, V = smith_normal_form(((0, 0), (0, 0)))
    assert S == ((0, 0), (0, 0))
    assert U == V == ((1, 0), (0, 1))


def test_snf_rectangular():
    check_decomposition(((2, 4, 4), (-6, 6, 12)))
    check_decomposition(((3,), (6,), (9,)))


matrices_3x3 = st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=100, deadline=None)
@given(matrices_3x3)
def test_snf_random_3x3(rows):
    A = tuple(map(tuple, rows))
    U, S, V = check_decomposition(A)
    prod = 1
    for d in (S[i][i] for i in range(3)):
        prod *= d
    assert prod == abs(determinant(A))


def test_kernel_examples():
    assert integer_kernel(((1, 1),)) == [(1, -1)]
    assert integer_kernel(((1, 0), (0, 1))) == []
    assert integer_kernel(((2, -4),)) == [(2, 1)]


def test_kernel_primitive_by_brute_force():
    # every small integer solution of 2x - 4y = 0 is a multiple of (2, 1)
    (k,) = integer_kernel(((2, -4),))
    for x, y in itertools.product(range(-6, 7), repeat=2):
        if 2 * x - 4 * y == 0:
            assert x * k[1] == y * k[0] and x % k[0] == 0


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=3))
def test_kernel_property(rows):
    A = tuple(map(tuple, rows))
    basis = integer_kernel(A)
    for x in basis:
        assert latlin.matvec(A, x) == (0,) * len(A)
    assert len(basis) == 4 - latlin.rank(A)
    if basis:
        # saturated: all invariant factors of the stacked basis are 1
        _, S, _ = smith_normal_form(basis)
        assert all(d == 1 for d in (S[i][i] for i in range(len(basis))))


def test_rational_solve_examples():
    assert rational_solve(((1, 0), (0, 1)), (3, 5)) == (3, 5)
    A = latlin.from_columns([(1, 0), (-1, -2)], 2)
    x = rational_solve(A, (0, -1))
    assert x == (Fraction(1, 2), Fraction(1, 2))
    assert tuple(Fraction(1, 2) * a + Fraction(1, 2) * b for a, b in zip((1, 0), (-1, -2))) == (0, -1)
    assert rational_solve(latlin.from_columns([(1, 0)], 2), (0, 1)) is None


def test_rational_solve_dependent_columns():
    with pytest.raises(ValueError):
        rational_solve(((1, 2), (2, 4)), (1, 2))


@settings(max_examples=80, deadline=None)
@given(matrices_3x3, st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_rational_solve_reproduces_b(rows, b):
    A = tuple(map(tuple, rows))
    if determinant(A) == 0:
        return
    x = rational_solve(A, b)
    assert latlin.matvec(A, x) == tuple(b)


def test_finite_index_span():
    assert finite_index_span([(1, 0), (0, 1)], 2)
    assert not finite_index_span([(1, 0)], 2)
    assert finite_index_span([(2, 0), (0, 3)], 2)
    assert determinant(((2, 0), (0, 3))) == 6


def test_unimodular_inverse():
    U, _, _ = smith_normal_form(((2, 4, 4), (-6, 6, 12), (10, -4, -16)))
    assert matmul(U, latlin.unimodular_inverse(U)) == latlin.identity(3)
