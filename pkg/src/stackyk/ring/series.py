"""Truncated power series in one formal variable t with polynomial
coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .poly import Poly, Scalar


@dataclass(frozen=True)
class TruncatedSeries:
    """sum_{k <= order} coefficients[k] * t^k."""

    coefficients: tuple[Poly, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def nvars(self) -> int:
        return self.coefficients[0].nvars

    def __getitem__(self, k: int) -> Poly:
        return self.coefficients[k]

    def map(self, f: Callable[[Poly], Poly]) -> "TruncatedSeries":
        return TruncatedSeries(tuple(f(c) for c in self.coefficients))


def _check(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"truncation orders differ: {a.order} vs {b.order}")


def zero_series(nvars: int, T: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(Poly(nvars) for _ in range(T + 1)))


def series_from(coefficients: Sequence[Poly], T: int) -> TruncatedSeries:
    """Pad or cut a coefficient list to order T."""
    nvars = coefficients[0].nvars
    coeffs = list(coefficients[: T + 1])
    coeffs += [Poly(nvars)] * (T + 1 - len(coeffs))
    return TruncatedSeries(tuple(coeffs))


def series_monomial(c: Poly, k: int, T: int) -> TruncatedSeries:
    """c * t^k truncated at T."""
    coeffs = [Poly(c.nvars)] * (T + 1)
    if k <= T:
        coeffs[k] = c
    return TruncatedSeries(tuple(coeffs))


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check(a, b)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coefficients, b.coefficients)))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_add(a, series_scale(b, -1))


def series_scale(a: TruncatedSeries, c: Poly | Scalar) -> TruncatedSeries:
    return TruncatedSeries(tuple(x * c for x in a.coefficients))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check(a, b)
    T = a.order
    out = [Poly(a.nvars) for _ in range(T + 1)]
    for i, x in enumerate(a.coefficients):
        if not x:
            continue
        for j in range(T + 1 - i):
            if b.coefficients[j]:
                out[i + j] = out[i + j] + x * b.coefficients[j]
    return TruncatedSeries(tuple(out))


def geometric_series(c: Poly, h: int, T: int) -> TruncatedSeries:
    """1 / (1 - c t^h) = sum_m c^m t^(h m), truncated at T."""
    if h < 1:
        raise ValueError("h must be a positive integer")
    coeffs = [Poly(c.nvars) for _ in range(T + 1)]
    power = Poly.const(1, c.nvars)
    for k in range(0, T + 1, h):
        coeffs[k] = power
        power = power * c
    return TruncatedSeries(tuple(coeffs))
