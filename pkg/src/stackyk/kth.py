"""The Laurent-polynomial presentation of K_0 of a toric DM stack.

For a stacky fan with rays v_0..v_{n-1} the ring is

    Q[x_i, x_i^-1] / ( prod_i x_i^{f(v_i)} - 1  for f in Hom(N, Z),
                       prod_{i in I} (1 - x_i) for I not in a cone )

where x_i is the class of the line bundle attached to ray i.  Inverses are
realised by extra variables xb_i with x_i * xb_i = 1, so the ring is an
ordinary polynomial quotient in 2n variables: x_0..x_{n-1}, xb_0..xb_{n-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, Mapping, Sequence

from . import latlin
from .fan import StackyFan, minimal_nonfaces
from .ring import GroebnerBasis, Poly, groebner, minimal_polynomial, normal_form, quotient_dimension
from .ring.poly import Monomial, Scalar

Laurent = Mapping[tuple[int, ...], Scalar]


def laurent_monomial(exponents: Sequence[int], c: Scalar = 1) -> Poly:
    """x^r as a polynomial in x, xb (negative exponents go to xb)."""
    n = len(exponents)
    exps = [max(e, 0) for e in exponents] + [max(-e, 0) for e in exponents]
    return Poly(2 * n, {tuple(exps): c})


def lattice_relation(fan: StackyFan, f: Sequence[int]) -> Poly:
    """prod_i x_i^{f(v_i)} - 1 for the linear function f."""
    values = [sum(a * b for a, b in zip(f, v)) for v in fan.rays]
    return laurent_monomial(values) - 1


def nonface_relation(fan: StackyFan, indices: Sequence[int]) -> Poly:
    """prod_{i in I} (1 - x_i)."""
    nv = 2 * fan.n
    out = Poly.const(1, nv)
    for i in indices:
        out = out * (1 - Poly.var(i, nv))
    return out


@dataclass(frozen=True, eq=False)
class KPresentation:
    fan: StackyFan
    generators: tuple[Poly, ...]
    basis: GroebnerBasis

    @property
    def n(self) -> int:
        return self.fan.n

    @property
    def nvars(self) -> int:
        return 2 * self.fan.n

    @property
    def variable_names(self) -> list[str]:
        return [f"x{i}" for i in range(self.n)] + [f"xb{i}" for i in range(self.n)]

    @cached_property
    def dimension(self) -> int:
        d = quotient_dimension(self.basis)
        if not isinstance(d, int):
            raise ArithmeticError("K-theory quotient is not finite-dimensional")
        return d

    def element(self, p: Poly) -> "KClass":
        return KClass(self, normal_form(p, self.basis))

    def one(self) -> "KClass":
        return self.element(Poly.const(1, self.nvars))

    def zero(self) -> "KClass":
        return KClass(self, Poly(self.nvars))

    def x(self, i: int) -> "KClass":
        return self.element(Poly.var(i, self.nvars))

    def xbar(self, i: int) -> "KClass":
        return self.element(Poly.var(self.n + i, self.nvars))

    def monomial(self, exponents: Sequence[int], c: Scalar = 1) -> "KClass":
        return self.element(laurent_monomial(exponents, c))

    def from_laurent(self, laurent: Laurent) -> "KClass":
        p = Poly(self.nvars)
        for r, c in laurent.items():
            if len(r) != self.n:
                raise ValueError(f"exponent vector {r} does not have {self.n} entries")
            p = p + laurent_monomial(r, c)
        return self.element(p)


def k_presentation(fan: StackyFan) -> KPresentation:
    """Presentation with x_i xb_i - 1, lattice relations for the standard
    dual basis of Hom(N, Z), and one product per minimal non-face."""
    return _k_presentation(fan)


@lru_cache(maxsize=None)
def _k_presentation(fan: StackyFan) -> KPresentation:
    n, nv = fan.n, 2 * fan.n
    gens = [Poly.var(i, nv) * Poly.var(n + i, nv) - 1 for i in range(n)]
    for f in latlin.identity(fan.rank):
        rel = lattice_relation(fan, f)
        if rel:
            gens.append(rel)
    gens.extend(nonface_relation(fan, I) for I in minimal_nonfaces(fan))
    return KPresentation(fan, tuple(gens), groebner(gens))


def k_dimension(fan: StackyFan) -> int:
    """dim_Q of the K-theory ring tensored with Q."""
    return k_presentation(fan).dimension


def k_normal_form(pres: KPresentation, laurent: Laurent | Poly) -> "KClass":
    """Canonical representative of a Laurent polynomial given as
    {exponent vector: coefficient} (or a polynomial in x, xb)."""
    if isinstance(laurent, Poly):
        return pres.element(laurent)
    return pres.from_laurent(laurent)


@dataclass(frozen=True, eq=False)
class KClass:
    """An element of a K-theory presentation, kept in normal form."""

    ring: KPresentation
    rep: Poly

    def _other(self, other) -> "KClass":
        if isinstance(other, KClass):
            if other.ring is not self.ring:
                raise ValueError("classes belong to different presentations")
            return other
        return self.ring.element(Poly.const(other, self.ring.nvars))

    def __add__(self, other) -> "KClass":
        return KClass(self.ring, self.rep + self._other(other).rep)

    __radd__ = __add__

    def __neg__(self) -> "KClass":
        return KClass(self.ring, -self.rep)

    def __sub__(self, other) -> "KClass":
        return KClass(self.ring, self.rep - self._other(other).rep)

    def __rsub__(self, other) -> "KClass":
        return self._other(other) - self

    def __mul__(self, other) -> "KClass":
        if isinstance(other, (int, Fraction)):
            return KClass(self.ring, self.rep * other)
        return self.ring.element(self.rep * self._other(other).rep)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "KClass":
        if m < 0:
            return self.inverse() ** (-m)
        return self.ring.element(self.rep ** m) if m else self.ring.one()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._other(other)
        if not isinstance(other, KClass):
            return NotImplemented
        return other.ring is self.ring and self.rep == other.rep

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.rep)

    def inverse(self) -> "KClass":
        """Inverse via the minimal polynomial: if p(c) = 0 with p(0) != 0
        then c^-1 = -(p(c) - p(0)) / (p(0) c)."""
        p = minimal_polynomial(self.rep, self.ring.basis)
        if p[0] == 0:
            raise ZeroDivisionError("class is not a unit")
        return polynomial_in(self, [-c / p[0] for c in p[1:]])

    def laurent_terms(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """(exponent vector, coefficient) with xb_i read as x_i^-1."""
        n = self.ring.n
        for m, c in self.rep.terms.items():
            yield tuple(m[i] - m[n + i] for i in range(n)), c

    def to_str(self) -> str:
        return self.rep.to_str(self.ring.variable_names)

    def __repr__(self) -> str:
        return f"KClass({self.to_str()})"


def polynomial_in(c: KClass, coefficients: Sequence[Scalar]) -> KClass:
    """sum_k coefficients[k] * c^k (Horner)."""
    out = c.ring.zero()
    for a in reversed(coefficients):
        out = out * c + a
    return out


def k_mul(a: KClass, b: KClass) -> KClass:
    return a * b


def k_add(a: KClass, b: KClass) -> KClass:
    return a + b


def k_inverse_power(c: KClass, m: int) -> KClass:
    """c^m for any integer m (c must be a unit when m < 0)."""
    return c ** m


def laurent_exponents(m: Monomial, n: int) -> tuple[int, ...]:
    return tuple(m[i] - m[n + i] for i in range(n))
