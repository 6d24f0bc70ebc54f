"""Birational morphisms of stacky fans and their K-theory pullbacks and
pushforwards.

A refinement mu: Sigma' -> Sigma is recorded by the integer matrix alpha
with v'_j = sum_i alpha[i][j] v_i.  Pullback sends x^r to
prod_j x'_j^{sum_i alpha[i][j] r_i}.  For weighted blowups (a new ray
v'_0 = sum h_i v_i inside a cone C of dimension d > 1) and codimension-one
reweightings (v'_ray = k v_ray) the pushforward is given in closed form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil
from typing import NamedTuple, Sequence

from . import latlin
from .fan import Cone, StackyFan, minimal_cone_containing
from .kth import KClass, KPresentation, k_presentation, laurent_monomial
from .ring import (
    Poly,
    TruncatedSeries,
    geometric_series,
    minimal_polynomial,
    series_from,
    series_monomial,
    series_mul,
    series_scale,
    series_sub,
)


class MorphismError(ValueError):
    """Raised for data that does not define the requested morphism."""


@dataclass(frozen=True, eq=False)
class RefinementMorphism:
    """mu: source -> target with source rays v'_j = sum_i alpha[i][j] v_i."""

    source: StackyFan
    target: StackyFan
    alpha: latlin.IntMatrix  # target.n rows, source.n columns
    supports: tuple[Cone, ...]  # minimal target cone of each source ray

    @property
    def source_ring(self) -> KPresentation:
        return k_presentation(self.source)

    @property
    def target_ring(self) -> KPresentation:
        return k_presentation(self.target)

    def pullback_exponents(self, r: Sequence[int]) -> tuple[int, ...]:
        return tuple(
            sum(self.alpha[i][j] * r[i] for i in range(self.target.n)) for j in range(self.source.n)
        )


def refinement_matrix(source: StackyFan, target: StackyFan, require_pure: bool = True) -> RefinementMorphism:
    """Solve each source ray against the rays of its minimal target cone.

    Raises MorphismError if some source cone is not inside a target cone,
    if a coefficient is not an integer, or (with ``require_pure``) if the
    target has a cone outside every full-dimensional cone.
    """
    if source.rank != target.rank:
        raise MorphismError("source and target live in lattices of different rank")
    if require_pure and not target.is_pure:
        raise MorphismError("target violates the standing assumption: some cone lies in no full-dimensional cone")
    alpha = [[0] * source.n for _ in range(target.n)]
    supports = []
    for j, v in enumerate(source.rays):
        found = minimal_cone_containing(target, v)
        if found is None:
            raise MorphismError(f"not a refinement: source ray {j} {list(v)} is outside the target support")
        cone, coeffs = found
        for i, a in zip(cone, coeffs):
            if a.denominator != 1:
                raise MorphismError(
                    f"non-integral coefficients: source ray {j} has coefficient {a} on target ray {i}"
                )
            alpha[i][j] = int(a)
        supports.append(cone)
    for k, c in enumerate(source.max_cones):
        if not target.is_cone(set().union(*(supports[j] for j in c))):
            raise MorphismError(f"not a refinement: source cone {k} {list(c)} lies in no target cone")
    return RefinementMorphism(source, target, latlin.as_matrix(alpha), tuple(supports))


def pullback_poly(m: RefinementMorphism, p: Poly) -> KClass:
    """Pullback of a polynomial in the target variables x, xb."""
    n = m.target.n
    out = Poly(m.source_ring.nvars)
    for mono, c in p.terms.items():
        r = [mono[i] - mono[n + i] for i in range(n)]
        out = out + laurent_monomial(m.pullback_exponents(r), c)
    return m.source_ring.element(out)


def pullback(m: RefinementMorphism, c: KClass) -> KClass:
    """mu^*: K(target) -> K(source)."""
    if c.ring is not m.target_ring:
        raise ValueError("class does not belong to the target presentation")
    return pullback_poly(m, c.rep)


@dataclass(frozen=True, eq=False)
class BlowupMorphism:
    base: RefinementMorphism
    center: Cone
    weights: tuple[int, ...]  # aligned with center
    new_ray: int

    @property
    def source_ring(self) -> KPresentation:
        return self.base.source_ring

    @property
    def target_ring(self) -> KPresentation:
        return self.base.target_ring

    @cached_property
    def _r_inverse_data(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        """(minimal polynomial p of u = R^-1, coefficients of u^-1 as a
        polynomial in u), both lowest degree first."""
        u = self.source_ring.xbar(self.new_ray)
        p = minimal_polynomial(u.rep, self.source_ring.basis)
        if p[0] == 0:
            raise ArithmeticError("R^-1 is not a unit in the source ring")
        return p, tuple(-c / p[0] for c in p[1:])

    @cached_property
    def _push_cache(self) -> dict[int, KClass]:
        return {}


def weighted_blowup(fan: StackyFan, cone: Sequence[int], weights: Sequence[int]) -> BlowupMorphism:
    """Insert v'_0 = sum h_i v_i (appended as the last ray) and replace each
    maximal cone containing C by the d cones that swap one ray of C for v'_0.
    """
    if len(cone) != len(weights):
        raise MorphismError("need one weight per ray of the center")
    if len(set(cone)) != len(cone):
        raise MorphismError("repeated ray in the center")
    if len(cone) <= 1:
        raise MorphismError("center has dimension 1: use reweight (codim1_reweight) instead")
    if any(h < 1 for h in weights):
        raise MorphismError("weights must be positive integers")
    if not fan.is_cone(cone):
        raise MorphismError(f"{list(cone)} is not a cone of the fan")
    if not fan.is_pure:
        raise MorphismError("fan violates the standing assumption: some cone lies in no full-dimensional cone")
    pairs = sorted(zip(cone, weights))
    center = tuple(i for i, _ in pairs)
    h = tuple(w for _, w in pairs)
    v0 = tuple(sum(w * fan.rays[i][r] for i, w in pairs) for r in range(fan.rank))
    for i, v in enumerate(fan.rays):
        if latlin.rank([v, v0]) == 1 and sum(a * b for a, b in zip(v, v0)) > 0:
            raise MorphismError(f"new ray {list(v0)} has the direction of existing ray {i}")
    new = fan.n
    cones = []
    for c in fan.max_cones:
        if set(center) <= set(c):
            cones.extend(tuple(sorted((set(c) - {i}) | {new})) for i in center)
        else:
            cones.append(c)
    source = StackyFan(fan.rank, fan.rays + (v0,), tuple(cones))
    return BlowupMorphism(refinement_matrix(source, fan), center, h, new)


def push_R_inverse_power(b: BlowupMorphism, l: int) -> KClass:
    """mu_*(R^-l) = 1 - prod_i (1 - xb_i) * sum_{s >= 0, h.s < l} prod_i xb_i^s_i."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    cached = b._push_cache.get(l)
    if cached is not None:
        return cached
    ring = b.target_ring
    nv, n = ring.nvars, ring.n
    xb = [Poly.var(n + i, nv) for i in b.center]
    partial = Poly(nv)
    for s in itertools.product(*(range((l - 1) // h + 1) for h in b.weights)):
        if sum(si * hi for si, hi in zip(s, b.weights)) < l:
            term = Poly.const(1, nv)
            for x, si in zip(xb, s):
                term = term * x ** si
            partial = partial + term
    for x in xb:
        partial = partial * (1 - x)
    result = ring.element(1 - partial)
    b._push_cache[l] = result
    return result


def minimal_generators(weights: Sequence[int], l: int) -> list[tuple[int, ...]]:
    """Minimal exponents s >= 0 with sum h_i s_i >= l."""
    gens = []
    for s in itertools.product(*(range(ceil(l / h) + 1) for h in weights)):
        total = sum(si * hi for si, hi in zip(s, weights))
        if total >= l and all(total - hi < l for si, hi in zip(s, weights) if si):
            gens.append(s)
    return sorted(gens)


def taylor_numerator(generators: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], int]:
    """Numerator of the multigraded Hilbert series of a monomial ideal:
    sum over nonempty subsets S of (-1)^(|S|+1) t^lcm(S)."""
    out: dict[tuple[int, ...], int] = {}
    for k in range(1, len(generators) + 1):
        for subset in itertools.combinations(generators, k):
            lcm = tuple(map(max, zip(*subset)))
            out[lcm] = out.get(lcm, 0) + (-1) ** (k + 1)
    return {m: c for m, c in out.items() if c}


def push_hilbert_oracle(b: BlowupMorphism, l: int) -> KClass:
    """mu_*(R^-l) from the Hilbert series of the ideal spanned by z^s with
    h.s >= l: its numerator with t_i replaced by xb_i."""
    if l < 1:
        raise ValueError("l must be positive")
    ring = b.target_ring
    nv, n = ring.nvars, ring.n
    out = Poly(nv)
    for s, c in taylor_numerator(minimal_generators(b.weights, l)).items():
        mono = [0] * nv
        for i, si in zip(b.center, s):
            mono[n + i] = si
        out = out + Poly(nv, {tuple(mono): c})
    return ring.element(out)


class SeriesCheck(NamedTuple):
    ok: bool
    lhs: list[KClass]
    rhs: list[KClass]
    first_mismatch: int | None


def _compare(ring: KPresentation, lhs: TruncatedSeries, rhs: TruncatedSeries) -> SeriesCheck:
    left = [ring.element(c) for c in lhs.coefficients]
    right = [ring.element(c) for c in rhs.coefficients]
    bad = next((k for k, (a, b) in enumerate(zip(left, right)) if a != b), None)
    return SeriesCheck(bad is None, left, right, bad)


def _closed_form(ring: KPresentation, factors: Sequence[tuple[int, int]], T: int) -> TruncatedSeries:
    """1/(1-t) - t/(1-t) * prod (1 - xb_i) / (1 - xb_i t^h_i) over (ray, h)."""
    nv, n = ring.nvars, ring.n
    one = Poly.const(1, nv)
    geo = geometric_series(one, 1, T)
    prod = series_monomial(one, 0, T)
    for i, h in factors:
        xb = Poly.var(n + i, nv)
        prod = series_mul(prod, series_scale(geometric_series(xb, h, T), 1 - xb))
    return series_sub(geo, series_mul(series_monomial(one, 1, T), series_mul(geo, prod)))


def push_theorem_check(b: BlowupMorphism, T: int = 8) -> SeriesCheck:
    """Compare sum_l mu_*(R^-l) t^l with the closed-form product, up to t^T."""
    ring = b.target_ring
    lhs = series_from([push_R_inverse_power(b, l).rep for l in range(T + 1)], T)
    return _compare(ring, lhs, _closed_form(ring, list(zip(b.center, b.weights)), T))


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_mod(a: Sequence[Fraction], monic: Sequence[Fraction]) -> list[Fraction]:
    a = list(a)
    d = len(monic) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for j in range(d + 1):
                a[k - d + j] -= c * monic[j]
    return a[:d] if d else []


def push_R_power(b: BlowupMorphism, e: int) -> KClass:
    """mu_*(R^e) for any integer e.  Positive powers are first rewritten as
    a polynomial in R^-1 using the minimal polynomial of R^-1."""
    if e <= 0:
        return push_R_inverse_power(b, -e)
    p, inv = b._r_inverse_data
    coeffs = [Fraction(1)]
    for _ in range(e):
        coeffs = _poly_mod(_poly_mul(coeffs, inv), p)
    out = b.target_ring.zero()
    for k, c in enumerate(coeffs):
        if c:
            out = out + push_R_inverse_power(b, k) * c
    return out


def push_class(b: BlowupMorphism, c: KClass) -> KClass:
    """mu_* of any source class.

    Each source monomial is mu^*(x^r) * R^e with r its exponents on the old
    rays and e = (exponent of x'_0) - sum_i h_i r_i; the projection formula
    gives x^r * mu_*(R^e).
    """
    if c.ring is not b.source_ring:
        raise ValueError("class does not belong to the source presentation")
    target = b.target_ring
    new = b.new_ray
    alpha = b.base.alpha
    out = target.zero()
    for exps, coeff in c.laurent_terms():
        r = [exps[j] for j in range(len(exps)) if j != new]
        e = exps[new] - sum(alpha[i][new] * r[i] for i in range(target.n))
        out = out + target.monomial(r) * push_R_power(b, e) * coeff
    return out


@dataclass(frozen=True, eq=False)
class ReweightMorphism:
    base: RefinementMorphism
    ray: int
    factor: int

    @property
    def source_ring(self) -> KPresentation:
        return self.base.source_ring

    @property
    def target_ring(self) -> KPresentation:
        return self.base.target_ring


def codim1_reweight(fan: StackyFan, ray: int, k: int) -> ReweightMorphism:
    """Same fan with the marking of ``ray`` multiplied by k."""
    if k < 1:
        raise MorphismError("factor must be a positive integer")
    if not 0 <= ray < fan.n:
        raise MorphismError(f"no ray {ray}")
    rays = tuple(tuple(k * x for x in v) if i == ray else v for i, v in enumerate(fan.rays))
    source = StackyFan(fan.rank, rays, fan.max_cones)
    return ReweightMorphism(refinement_matrix(source, fan, require_pure=False), ray, k)


def push_codim1(m: ReweightMorphism, mexp: int) -> KClass:
    """mu_*(R'^-mexp) = xb_ray^(l+1) where mexp = l k + r, 1 <= r <= k."""
    if mexp < 1:
        raise ValueError("exponent must be positive")
    return m.target_ring.xbar(m.ray) ** ((mexp - 1) // m.factor + 1)


def push_codim1_series_check(m: ReweightMorphism, T: int) -> SeriesCheck:
    """Compare 1 + sum_{l>=1} mu_*(R'^-l) t^l with
    1/(1-t) - t/(1-t) * (1 - xb) / (1 - xb t^k), up to t^T."""
    ring = m.target_ring
    coeffs = [ring.one().rep] + [push_codim1(m, l).rep for l in range(1, T + 1)]
    lhs = series_from(coeffs, T)
    return _compare(ring, lhs, _closed_form(ring, [(m.ray, m.factor)], T))
