from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from stackyk import corpus
from stackyk.kth import k_presentation
from stackyk.ring import (
    Poly,
    buchberger_criterion_holds,
    geometric_series,
    groebner,
    minimal_polynomial,
    normal_form,
    quotient_dimension,
    s_polynomial,
    series_from,
    series_mul,
    series_sub,
    standard_monomials,
)

X = Poly.var(0, 2)
Y = Poly.var(1, 2)
ONE = Poly.const(1, 2)


def to_sympy(p, symbols):
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sympy.prod([s**e for s, e in zip(symbols, m)])
         for m, c in p.terms.items()),
        sympy.Integer(0),
    )


def sympy_quotient_dimension(gens, nvars):
    """Count standard monomials of a sympy Groebner basis by brute force."""
    symbols = sympy.symbols(f"z0:{nvars}")
    G = sympy.groebner([to_sympy(g, symbols) for g in gens], *symbols, order="grevlex")
    if list(G.exprs) == [1]:
        return 0
    leads = [sympy.Poly(g, *symbols).monoms(order="grevlex")[0] for g in G.exprs]
    bound = max(max(m) for m in leads) + 1
    count = 0
    frontier = [(0,) * nvars]
    seen = set(frontier)
    while frontier:
        nxt = []
        for m in frontier:
            if any(all(a >= b for a, b in zip(m, l)) for l in leads):
                continue
            count += 1
            for i in range(nvars):
                mm = m[:i] + (m[i] + 1,) + m[i + 1:]
                if mm[i] <= bound * nvars and mm not in seen:
                    seen.add(mm)
                    nxt.append(mm)
        frontier = nxt
    return count


CORPUS_IDEALS = {name: k_presentation(f()).generators for name, f in corpus.CORPUS.items()}


def test_poly_arithmetic():
    p = (X + Y) ** 2
    assert p == X * X + 2 * X * Y + Y * Y
    assert (p - p) == Poly.const(0, 2)
    assert (X - 1).to_str(["x", "y"]) == "x - 1"


def test_groebner_x2_minus_1_xy_minus_1():
    G = groebner([X * X - 1, X * Y - 1])
    assert buchberger_criterion_holds(G)
    assert normal_form(X**3, G) == normal_form(X, G)
    # y = x^{-1} = x in the quotient, so the quotient is Q[x]/(x^2 - 1)
    assert quotient_dimension(G) == 2
    assert normal_form(X - Y, G) == Poly.const(0, 2)


def test_groebner_generators_reduce_to_zero():
    gens = [X * X - 1, X * Y - 1]
    G = groebner(gens)
    for g in gens:
        assert normal_form(g, G) == Poly.const(0, 2)


def test_unit_ideal():
    G = groebner([X, X - 1])
    assert G.is_unit_ideal
    assert quotient_dimension(G) == 0
    assert standard_monomials(G) == []


def test_monomial_ideal_quotient():
    G = groebner([X * X, X * Y, Y * Y])
    assert quotient_dimension(G) == 3
    assert set(standard_monomials(G)) == {(0, 0), (1, 0), (0, 1)}


def test_infinite_quotient():
    G = groebner([X])
    assert quotient_dimension(G) == float("inf")
    with pytest.raises(ValueError):
        standard_monomials(G)


def test_single_variable_linear():
    x = Poly.var(0, 1)
    assert standard_monomials(groebner([x - 1])) == [(0,)]


def test_s_polynomial_cancels_leads():
    s = s_polynomial(X * X - 1, X * Y - 1)
    assert s == Y - X or s == X - Y


def test_minimal_polynomial():
    x = Poly.var(0, 1)
    G = groebner([(x - 1) ** 3])
    assert minimal_polynomial(x, G) == (-1, 3, -3, 1)
    assert minimal_polynomial(Poly.const(5, 1), G) == (-5, 1)


@pytest.mark.parametrize("name", sorted(CORPUS_IDEALS))
def test_corpus_ideal_buchberger(name):
    G = groebner(list(CORPUS_IDEALS[name]))
    assert buchberger_criterion_holds(G)
    for g in CORPUS_IDEALS[name]:
        assert normal_form(g, G) == Poly.const(0, g.nvars)


@pytest.mark.parametrize("name", sorted(CORPUS_IDEALS))
def test_corpus_ideal_order_invariance(name):
    gens = list(CORPUS_IDEALS[name])
    assert quotient_dimension(groebner(gens, "degrevlex")) == quotient_dimension(groebner(gens, "lex"))


@pytest.mark.parametrize("name", sorted(CORPUS_IDEALS))
def test_corpus_ideal_dimension_matches_sympy(name):
    gens = list(CORPUS_IDEALS[name])
    assert quotient_dimension(groebner(gens)) == sympy_quotient_dimension(gens, gens[0].nvars)


monomials = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(monomials, st.fractions(max_denominator=5), max_size=5).map(lambda t: Poly(2, t))
G_SAMPLE = groebner([X * X - 1, X * Y - 1])
G_DEGENERATE = groebner([(X - 1) ** 2, (X - 1) * (Y - 1), (Y - 1) ** 2])


@settings(max_examples=60, deadline=None)
@given(polys)
def test_normal_form_idempotent(p):
    for G in (G_SAMPLE, G_DEGENERATE):
        nf = normal_form(p, G)
        assert normal_form(nf, G) == nf


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.fractions(max_denominator=4), st.fractions(max_denominator=4))
def test_normal_form_linear(p, q, a, b):
    for G in (G_SAMPLE, G_DEGENERATE):
        lhs = normal_form(p * a + q * b, G)
        rhs = normal_form(p, G) * a + normal_form(q, G) * b
        assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(polys)
def test_normal_form_difference_in_ideal(p):
    nf = normal_form(p, G_DEGENERATE)
    assert (p - nf) in G_DEGENERATE


def test_geometric_series_examples():
    u = Poly.var(0, 1)
    zero, one = Poly.const(0, 1), Poly.const(1, 1)
    assert geometric_series(zero, 1, 3).coefficients == (one, zero, zero, zero)
    assert geometric_series(u, 2, 5).coefficients == (one, zero, u, zero, u * u, zero)
    assert geometric_series(one, 1, 3).coefficients == (one,) * 4


@settings(max_examples=30, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 3)), st.integers(-3, 3), max_size=3), st.integers(1, 4), st.integers(0, 8))
def test_geometric_series_inverts(cterms, h, T):
    c = Poly(1, cterms)
    one, zero = Poly.const(1, 1), Poly.const(0, 1)
    factor = series_from([one] + [zero] * (h - 1) + [-c], T)
    product = series_mul(geometric_series(c, h, T), factor)
    assert product.coefficients == (one,) + (zero,) * T


def test_series_sub_self_is_zero():
    s = geometric_series(Poly.var(0, 1), 1, 4)
    assert all(not c for c in series_sub(s, s).coefficients)


def test_fractions_exact():
    p = X * Fraction(1, 3) + Y * Fraction(2, 3)
    assert (p * 3) == X + 2 * Y
