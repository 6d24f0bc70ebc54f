"""Buchberger's algorithm and computations in zero-dimensional quotients."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .. import latlin
from .poly import Monomial, Poly, divides, mono_div, mono_lcm, mono_mul, order_key


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic generators sorted by leading monomial,
    largest first.  An empty generator list is the zero ideal."""

    generators: tuple[Poly, ...]
    order: str
    nvars: int

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading(self.order)[0] for g in self.generators]

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def reduce(self, p: Poly) -> Poly:
        return normal_form(p, self)

    def __contains__(self, p: Poly) -> bool:
        return not normal_form(p, self)


def _reduce_terms(terms: dict, basis: Sequence[tuple[Monomial, Poly]], key) -> dict:
    p = dict(terms)
    rem: dict[Monomial, Fraction] = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if divides(lm, m):
                q = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    mm = mono_mul(gm, q)
                    v = p.get(mm, 0) - c * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = p.pop(m)
    return rem


def _reducer_list(polys: Sequence[Poly], key) -> list[tuple[Monomial, Poly]]:
    """(leading monomial, monic poly) pairs."""
    out = []
    for g in polys:
        lm = max(g.terms, key=key)
        out.append((lm, g * (1 / g.terms[lm])))
    return out


def normal_form(p: Poly, G: GroebnerBasis) -> Poly:
    """Remainder of p on full division by G (zero iff p is in the ideal)."""
    if p.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    key = order_key(G.order)
    return Poly(p.nvars, _reduce_terms(p.terms, _reducer_list(G.generators, key), key))


def s_polynomial(f: Poly, g: Poly, order: str = "degrevlex") -> Poly:
    key = order_key(order)
    (mf, cf), (mg, cg) = f.leading(key), g.leading(key)
    lcm = mono_lcm(mf, mg)
    return (Poly.monomial(mono_div(lcm, mf), 1 / cf) * f) - (Poly.monomial(mono_div(lcm, mg), 1 / cg) * g)


def groebner(generators: Sequence[Poly], order: str = "degrevlex") -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed smallest lcm degree first; pairs with coprime
    leading monomials and pairs covered by the chain criterion are skipped.
    """
    key = order_key(order)
    gens = [g for g in generators if g]
    if not gens:
        if not generators:
            raise ValueError("need at least one generator")
        return GroebnerBasis((), order, generators[0].nvars)
    nvars = gens[0].nvars
    if any(g.is_constant() for g in gens):
        return GroebnerBasis((Poly.const(1, nvars),), order, nvars)

    basis: list[tuple[Monomial, Poly]] = []
    pending: set[tuple[int, int]] = set()

    def add(poly: Poly):
        lm = max(poly.terms, key=key)
        basis.append((lm, poly * (1 / poly.terms[lm])))
        new = len(basis) - 1
        pending.update((i, new) for i in range(new))

    for g in gens:
        r = _reduce_terms(g.terms, basis, key)
        if r:
            add(Poly(nvars, r))

    while pending:
        i, j = min(pending, key=lambda ij: (sum(mono_lcm(basis[ij[0]][0], basis[ij[1]][0])), ij[1], ij[0]))
        pending.discard((i, j))
        lmi, lmj = basis[i][0], basis[j][0]
        lcm = mono_lcm(lmi, lmj)
        if all(a == 0 or b == 0 for a, b in zip(lmi, lmj)):
            continue
        if any(
            k not in (i, j)
            and divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        s = s_polynomial(basis[i][1], basis[j][1], key)
        r = _reduce_terms(s.terms, basis, key)
        if r:
            poly = Poly(nvars, r)
            if poly.is_constant():
                return GroebnerBasis((Poly.const(1, nvars),), order, nvars)
            add(poly)

    return GroebnerBasis(tuple(_interreduce([p for _, p in basis], key)), order, nvars)


def _interreduce(polys: list[Poly], key) -> list[Poly]:
    lms = [max(p.terms, key=key) for p in polys]
    keep = []
    for i, (lm, p) in enumerate(zip(lms, polys)):
        dominated = any(
            divides(other, lm) and (other != lm or j < i) for j, other in enumerate(lms) if j != i
        )
        if not dominated:
            keep.append(p)
    out = []
    for i, p in enumerate(keep):
        others = _reducer_list(keep[:i] + keep[i + 1:], key)
        out.append(Poly(p.nvars, _reduce_terms(p.terms, others, key)).monic(key))
    out.sort(key=lambda p: key(max(p.terms, key=key)), reverse=True)
    return out


def buchberger_criterion_holds(G: GroebnerBasis) -> bool:
    """Every S-polynomial of two generators reduces to zero."""
    return all(
        not normal_form(s_polynomial(f, g, G.order), G)
        for f, g in itertools.combinations(G.generators, 2)
    )


def _is_finite(G: GroebnerBasis) -> bool:
    if G.is_unit_ideal():
        return True
    lms = G.leading_monomials
    for v in range(G.nvars):
        if not any(m[v] > 0 and sum(m) == m[v] for m in lms):
            return False
    return True


def quotient_dimension(G: GroebnerBasis) -> int | float:
    """Dimension over Q of the quotient ring, or ``math.inf``."""
    if not _is_finite(G):
        return math.inf
    return len(standard_monomials(G))


def standard_monomials(G: GroebnerBasis) -> list[Monomial]:
    """Monomials divisible by no leading monomial, smallest first.

    Raises ValueError when the quotient is infinite-dimensional.
    """
    if not _is_finite(G):
        raise ValueError("quotient ring is infinite-dimensional")
    if G.is_unit_ideal():
        return []
    lms = G.leading_monomials
    one = (0,) * G.nvars
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(G.nvars):
                mm = m[:v] + (m[v] + 1,) + m[v + 1:]
                if mm not in seen and not any(divides(lm, mm) for lm in lms):
                    seen.add(mm)
                    nxt.append(mm)
        frontier = nxt
    key = order_key(G.order)
    return sorted(seen, key=key)


def coordinates(p: Poly, G: GroebnerBasis, basis: Sequence[Monomial] | None = None) -> tuple[Fraction, ...]:
    """Coefficients of the normal form of p on the standard monomials."""
    basis = standard_monomials(G) if basis is None else basis
    nf = normal_form(p, G)
    return tuple(nf.terms.get(m, Fraction(0)) for m in basis)


def minimal_polynomial(p: Poly, G: GroebnerBasis) -> tuple[Fraction, ...]:
    """Monic minimal polynomial over Q of the class of p in the quotient.

    Coefficients are returned lowest degree first.  The quotient must be
    finite-dimensional; the degree is at most its dimension.
    """
    basis = standard_monomials(G)
    one = Poly.const(1, G.nvars)
    vectors: list[tuple[Fraction, ...]] = []
    power = normal_form(one, G)
    for k in range(len(basis) + 1):
        vec = coordinates(power, G, basis)
        combo = latlin.express_in_span(vectors, vec)
        if combo is not None:
            return tuple(-c for c in combo) + (Fraction(1),)
        vectors.append(vec)
        power = normal_form(power * p, G)
    raise RuntimeError("minimal polynomial search exceeded the quotient dimension")
