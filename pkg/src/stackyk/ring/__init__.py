"""Exact polynomial rings over Q: arithmetic, Groebner bases, quotient
rings and truncated series."""

from .groebner import (
    GroebnerBasis,
    buchberger_criterion_holds,
    coordinates,
    groebner,
    minimal_polynomial,
    normal_form,
    quotient_dimension,
    s_polynomial,
    standard_monomials,
)
from .poly import Monomial, Poly, degrevlex_key, lex_key
from .series import (
    TruncatedSeries,
    geometric_series,
    series_add,
    series_from,
    series_monomial,
    series_mul,
    series_scale,
    series_sub,
    zero_series,
)

__all__ = [
    "GroebnerBasis", "Monomial", "Poly", "TruncatedSeries",
    "buchberger_criterion_holds", "coordinates", "degrevlex_key", "geometric_series",
    "groebner", "lex_key", "minimal_polynomial", "normal_form", "quotient_dimension",
    "s_polynomial", "series_add", "series_from", "series_monomial", "series_mul",
    "series_scale", "series_sub", "standard_monomials", "zero_series",
]
