"""SR-cohomology of a stacky fan.

The ring Q[N, Sigma] / (t_1, ..., t_rank) is computed sector by sector: the
summand attached to a Box element v is the untwisted SR-cohomology of the
quotient fan along the minimal cone of v, shifted in degree by deg(v).
:func:`sr_truncated_oracle` computes the same graded pieces straight from
the partial semigroup ring, and :func:`graded_dim_formula_check` compares
against (1 - t)^rank * sum_n t^deg(n).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from . import latlin
from .fan import (
    BoxElement,
    StackyFan,
    box_of_fan,
    lattice_points_of_degree_at_most,
    minimal_cone_containing,
    minimal_nonfaces,
    quotient_fan,
    support_is_convex,
)
from .kth import k_dimension
from .ring import GroebnerBasis, Poly, groebner, standard_monomials

log = logging.getLogger(__name__)

GradedDimension = dict[Fraction, int]


def _graded(items) -> GradedDimension:
    out: dict[Fraction, int] = {}
    for d, k in items:
        out[Fraction(d)] = out.get(Fraction(d), 0) + k
    return {d: out[d] for d in sorted(out) if out[d]}


def graded_total(g: GradedDimension) -> int:
    return sum(g.values())


@dataclass(frozen=True, eq=False)
class SectorPresentation:
    """Q[D'_j] / (non-face monomials, linear forms) for one Box element.

    ``rays[j]`` is the original ray index of variable D'_j.
    """

    box: BoxElement
    rays: tuple[int, ...]
    monomial_relations: tuple[Poly, ...]
    linear_relations: tuple[Poly, ...]
    basis: GroebnerBasis | None  # None when there are no variables

    def graded(self) -> GradedDimension:
        """Hilbert function of the sector, shifted by deg(v)."""
        shift = self.box.degree
        if self.basis is None:
            return {shift: 1}
        return _graded((shift + sum(m), 1) for m in standard_monomials(self.basis))

    @property
    def dimension(self) -> int:
        return graded_total(self.graded())


def sector_presentation(fan: StackyFan, v: BoxElement) -> SectorPresentation:
    """Presentation of the sector H_v via the quotient fan of v's minimal cone.

    Raises :class:`~stackyk.fan.InvalidFanError` if the quotient rays do not
    span a finite-index sublattice.
    """
    q = quotient_fan(fan, v.cone)
    k = q.fan.n
    if k == 0:
        return SectorPresentation(v, (), (), (), None)
    monos = []
    for I in minimal_nonfaces(q.fan):
        m = [0] * k
        for i in I:
            m[i] = 1
        monos.append(Poly(k, {tuple(m): 1}))
    linear = []
    for f in latlin.identity(q.fan.rank):
        coeffs = [sum(a * b for a, b in zip(f, ray)) for ray in q.fan.rays]
        lin = Poly(k, {tuple(int(i == j) for i in range(k)): c for j, c in enumerate(coeffs)})
        if lin:
            linear.append(lin)
    return SectorPresentation(v, q.rays, tuple(monos), tuple(linear), groebner(monos + linear))


class SectorData(NamedTuple):
    box: BoxElement
    presentation: SectorPresentation
    dimension: int
    graded: GradedDimension


def sr_dimension(fan: StackyFan) -> tuple[GradedDimension, list[SectorData]]:
    """Graded dimension of H_SR as the sum of its shifted sectors."""
    sectors = []
    total: list[tuple[Fraction, int]] = []
    for v in box_of_fan(fan):
        pres = sector_presentation(fan, v)
        g = pres.graded()
        sectors.append(SectorData(v, pres, graded_total(g), g))
        total.extend(g.items())
    return _graded(total), sectors


def _share_cone(fan: StackyFan, cone: tuple[int, ...], ray: int) -> bool:
    return fan.is_cone(set(cone) | {ray})


def sr_truncated_oracle(fan: StackyFan, D: Fraction | int) -> GradedDimension:
    """Graded pieces of Q[N, Sigma]/(t_1..t_rank) up to degree D, directly.

    The degree-d piece has the lattice points of degree d as a basis modulo
    the span of [w] * t_i over points w of degree d - 1, where
    [w][v_j] = [w + v_j] if w and v_j share a cone and 0 otherwise.
    """
    points = lattice_points_of_degree_at_most(fan, D)
    by_degree: dict[Fraction, list[tuple[int, ...]]] = {}
    for p, d in points:
        by_degree.setdefault(d, []).append(p)
    out = []
    for d, pts in sorted(by_degree.items()):
        column = {p: k for k, p in enumerate(pts)}
        rows = []
        for w in by_degree.get(d - 1, []):
            cone = minimal_cone_containing(fan, w)[0]
            partners = [j for j in range(fan.n) if _share_cone(fan, cone, j)]
            for f in latlin.identity(fan.rank):
                row = [0] * len(pts)
                for j in partners:
                    coeff = sum(a * b for a, b in zip(f, fan.rays[j]))
                    if coeff:
                        target = tuple(a + b for a, b in zip(w, fan.rays[j]))
                        row[column[target]] += coeff
                if any(row):
                    rows.append(row)
        out.append((d, len(pts) - latlin.rank(rows)))
    return _graded(out)


class FormulaCheck(NamedTuple):
    ok: bool
    series: GradedDimension  # (1 - t)^rank * sum t^deg, zero terms dropped
    expected: GradedDimension  # sector method, truncated at D
    diff: dict[Fraction, int]  # series - expected where nonzero
    support_confirmed: bool


def graded_dim_formula_check(fan: StackyFan, D: Fraction | int) -> FormulaCheck:
    """Compare (1 - t)^rank * sum_{n in |Sigma|} t^deg(n) with the sector
    computation, coefficient by coefficient up to degree D.

    The identity needs a complete fan or a subdivision of a cone; if that
    cannot be confirmed a warning is logged and the check still runs.
    """
    D = Fraction(D)
    confirmed = bool(support_is_convex(fan))
    if not confirmed:
        log.warning("support of the fan is not confirmed to be complete or a cone; formula may not apply")
    counts: dict[Fraction, int] = {}
    for _, d in lattice_points_of_degree_at_most(fan, D):
        counts[d] = counts.get(d, 0) + 1
    series = _graded(
        (d + k, (-1) ** k * comb(fan.rank, k) * c)
        for d, c in counts.items()
        for k in range(fan.rank + 1)
        if d + k <= D
    )
    expected = {d: c for d, c in sr_dimension(fan)[0].items() if d <= D}
    degrees = sorted(set(series) | set(expected))
    diff = {d: series.get(d, 0) - expected.get(d, 0) for d in degrees if series.get(d, 0) != expected.get(d, 0)}
    return FormulaCheck(not diff, series, expected, diff, confirmed)


class ChernRow(NamedTuple):
    box: BoxElement
    rotations: tuple[Fraction | None, ...]  # alpha_i on the minimal cone, None elsewhere
    dimension: int


class ChernTable(NamedTuple):
    rows: list[ChernRow]
    total: int


def chern_table(fan: StackyFan) -> ChernTable:
    """One row per Box element: the point y_i = exp(2 pi i alpha_i) of the
    K-theory spectrum (stored as the exact alpha_i) and the dimension of the
    matching cohomology sector.

    Raises ArithmeticError if the total disagrees with the K-theory
    dimension.
    """
    _, sectors = sr_dimension(fan)
    rows = []
    for s in sectors:
        alpha = dict(zip(s.box.cone, s.box.coefficients))
        rows.append(ChernRow(s.box, tuple(alpha.get(i) for i in range(fan.n)), s.dimension))
    total = sum(r.dimension for r in rows)
    kdim = k_dimension(fan)
    if total != kdim:
        raise ArithmeticError(f"sector total {total} differs from K-theory dimension {kdim}")
    return ChernTable(rows, total)
