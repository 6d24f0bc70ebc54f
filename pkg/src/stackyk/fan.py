"""Reduced stacky fans: validation, cone queries, Box enumeration,
quotient fans and minimal non-faces.

A stacky fan is stored as the lattice rank, the ordered list of marked ray
vectors (not necessarily primitive) and the index sets of the maximal cones.
Faces of a simplicial cone are exactly the subsets of its index set, so
they are never stored.  Ray indices are 0-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import floor
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

from . import latlin

Cone = tuple[int, ...]
Vector = tuple[int, ...]


class InvalidFanError(ValueError):
    """Raised when fan data violates a stacky fan invariant."""

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


@dataclass(frozen=True)
class StackyFan:
    """A simplicial fan in Z^rank with a chosen lattice point on every ray.

    ``max_cones`` may list non-maximal cones; they are dropped on
    construction.  Construction raises :class:`InvalidFanError` if the data
    is not a valid reduced stacky fan.
    """

    rank: int
    rays: tuple[Vector, ...]
    max_cones: tuple[Cone, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        cones = tuple(tuple(sorted(set(int(i) for i in c))) for c in self.max_cones)
        object.__setattr__(self, "rays", rays)
        problems = _diagnose(self.rank, rays, cones)
        if problems:
            raise InvalidFanError(problems)
        maximal = sorted(
            {c for c in cones if not any(set(c) < set(d) for d in cones)},
            key=lambda c: (len(c), c),
        )
        object.__setattr__(self, "max_cones", tuple(maximal))

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "StackyFan":
        return cls(int(data["rank"]), tuple(map(tuple, data["rays"])),
                   tuple(map(tuple, data["max_cones"])), data.get("name"))

    def to_dict(self) -> dict:
        doc = {"rank": self.rank, "rays": [list(r) for r in self.rays],
               "max_cones": [list(c) for c in self.max_cones]}
        if self.name:
            doc["name"] = self.name
        return doc

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray_matrix(self, cone: Iterable[int]) -> latlin.IntMatrix:
        """Matrix whose columns are the marked rays of ``cone``."""
        return latlin.from_columns([self.rays[i] for i in cone], self.rank)

    def is_cone(self, indices: Iterable[int]) -> bool:
        s = set(indices)
        return any(s <= set(c) for c in self.max_cones)

    @cached_property
    def cones(self) -> tuple[Cone, ...]:
        """Every cone of the fan (all faces of maximal cones), by size."""
        out = set()
        for c in self.max_cones:
            for k in range(len(c) + 1):
                out.update(itertools.combinations(c, k))
        return tuple(sorted(out, key=lambda c: (len(c), c)))

    @cached_property
    def is_pure(self) -> bool:
        """Every cone lies in a cone of dimension rank."""
        return all(len(c) == self.rank for c in self.max_cones)

    @cached_property
    def is_complete(self) -> bool:
        # Simplicial fan with full-dimensional maximal cones is complete iff
        # every ridge lies in exactly two maximal cones.
        if not self.is_pure:
            return False
        if self.rank == 0:
            return True
        return all(count == 2 for count in _ridge_counts(self).values())


def _ridge_counts(fan: StackyFan) -> dict[Cone, int]:
    counts: dict[Cone, int] = {}
    for c in fan.max_cones:
        for ridge in itertools.combinations(c, len(c) - 1):
            counts[ridge] = counts.get(ridge, 0) + 1
    return counts


def _diagnose(rank: int, rays: Sequence[Vector], cones: Sequence[Cone]) -> list[str]:
    out: list[str] = []
    if rank < 0:
        return [f"rank must be nonnegative, got {rank}"]
    for i, r in enumerate(rays):
        if len(r) != rank:
            out.append(f"ray {i} has length {len(r)}, expected {rank}")
        elif not any(r):
            out.append(f"ray {i} is zero")
    if out:
        return out
    if not cones:
        return ["no cones given"]
    n = len(rays)
    for k, c in enumerate(cones):
        bad = [i for i in c if not 0 <= i < n]
        if bad:
            out.append(f"cone {k} {list(c)} refers to missing rays {bad}")
    if out:
        return out
    for k, c in enumerate(cones):
        if latlin.rank(latlin.from_columns([rays[i] for i in c], rank)) != len(c):
            out.append(f"cone {k} {list(c)} is not simplicial: its rays are linearly dependent")
    used = set().union(*map(set, cones))
    for i in range(n):
        if i not in used:
            out.append(f"ray {i} lies in no cone")
    if out:
        return out
    for (a, c1), (b, c2) in itertools.combinations(enumerate(cones), 2):
        if not _meet_in_common_face(rays, c1, c2):
            out.append(f"cones {a} {list(c1)} and {b} {list(c2)} do not intersect in a common face")
    if not latlin.finite_index_span(rays, rank):
        out.append("condition (2.1) violated: rays do not span a finite-index subgroup of the lattice")
    return out


def _meet_in_common_face(rays: Sequence[Vector], c1: Cone, c2: Cone) -> bool:
    """Check cone(c1) ∩ cone(c2) == cone(c1 ∩ c2) for simplicial cones.

    A point in both cones gives a kernel vector of [V_A | -V_B | V_common]
    (A = c1 - c2, B = c2 - c1) that is nonnegative on the A, B block; the
    intersection is too big iff such a vector is nonzero on that block.  By
    conformal decomposition it suffices to look at circuits.
    """
    common = sorted(set(c1) & set(c2))
    only1 = [i for i in c1 if i not in common]
    only2 = [i for i in c2 if i not in common]
    if not only1 or not only2:
        return True
    cols = [rays[i] for i in only1] + [tuple(-x for x in rays[i]) for i in only2] + [rays[i] for i in common]
    p = len(only1) + len(only2)
    dim = len(rays[0])
    for size in range(2, min(len(cols), dim + 1) + 1):
        for subset in itertools.combinations(range(len(cols)), size):
            if all(j >= p for j in subset):
                continue
            sub = latlin.from_columns([cols[j] for j in subset], dim)
            kernel = latlin.integer_kernel(sub)
            if len(kernel) != 1 or not all(kernel[0]):
                continue
            signs = [kernel[0][k] for k, j in enumerate(subset) if j < p]
            if all(s > 0 for s in signs) or all(s < 0 for s in signs):
                return False
    return True


class FanReport(NamedTuple):
    fan: StackyFan | None
    diagnostics: list[str]
    complete: bool | None
    pure: bool | None

    @property
    def ok(self) -> bool:
        return self.fan is not None


def validate_fan(candidate: Mapping[str, Any]) -> FanReport:
    """Validate raw fan data (the JSON fan schema as a mapping).

    Never raises on bad fan content; all violations are listed in
    ``diagnostics``.  Completeness and purity are reported for
    valid fans but do not affect validity.
    """
    try:
        fan = StackyFan.from_dict(candidate)
    except InvalidFanError as err:
        return FanReport(None, err.diagnostics, None, None)
    except (KeyError, TypeError, ValueError) as err:
        return FanReport(None, [f"malformed fan data: {err!r}"], None, None)
    return FanReport(fan, [], fan.is_complete, fan.is_pure)


def minimal_cone_containing(fan: StackyFan, w: Sequence[int]) -> tuple[Cone, latlin.RationalVector] | None:
    """Minimal cone containing w and the coefficients of w on its rays.

    Returns None when w lies outside the support of the fan.
    """
    return _minimal_cone(fan, tuple(w))


@lru_cache(maxsize=None)
def _minimal_cone(fan: StackyFan, w: Vector) -> tuple[Cone, latlin.RationalVector] | None:
    if not any(w):
        return (), ()
    for c in fan.max_cones:
        alpha = latlin.rational_solve(fan.ray_matrix(c), w)
        if alpha is not None and all(a >= 0 for a in alpha):
            support = tuple(i for i, a in zip(c, alpha) if a > 0)
            return support, tuple(a for a in alpha if a > 0)
    return None


def degree_of(fan: StackyFan, w: Sequence[int]) -> Fraction:
    """Sum of the coefficients of w in its minimal cone."""
    found = minimal_cone_containing(fan, tuple(w))
    if found is None:
        raise ValueError(f"{tuple(w)} is outside the support of the fan")
    return sum(found[1], Fraction(0))


@lru_cache(maxsize=None)
def minimal_nonfaces(fan: StackyFan) -> tuple[Cone, ...]:
    """Inclusion-minimal sets of rays that lie in no common cone."""
    found: list[Cone] = []
    for size in range(1, fan.n + 1):
        for subset in itertools.combinations(range(fan.n), size):
            s = set(subset)
            if any(set(f) <= s for f in found):
                continue
            if not fan.is_cone(subset):
                found.append(subset)
    return tuple(found)


@dataclass(frozen=True, order=True)
class BoxElement:
    """A lattice point sum(alpha_i v_i) with 0 < alpha_i < 1 on the rays of
    its minimal cone."""

    point: Vector
    cone: Cone
    coefficients: latlin.RationalVector

    @property
    def degree(self) -> Fraction:
        return sum(self.coefficients, Fraction(0))

    def rotation(self, ray: int) -> Fraction:
        """alpha for ``ray`` (zero for rays outside the minimal cone)."""
        return dict(zip(self.cone, self.coefficients)).get(ray, Fraction(0))


def _parallelepiped(fan: StackyFan, cone: Cone) -> list[tuple[Vector, tuple[Fraction, ...]]]:
    """Lattice points sum(alpha_i v_i), alpha_i in [0,1), over the rays of
    ``cone`` with their coefficient vectors (aligned with ``cone``).

    The lattice N ∩ span(cone) modulo the span of the rays is
    ⊕ Z/d_j with d_j the invariant factors of the ray matrix.  With
    U A V = S, class c ∈ ⊕ [0, d_j) is the point U^-1[:, :k] c, whose
    coefficients are V S^-1 c.
    """
    k = len(cone)
    if k == 0:
        return [((0,) * fan.rank, ())]
    A = fan.ray_matrix(cone)
    U, S, V = latlin.smith_normal_form(A)
    d = [S[j][j] for j in range(k)]
    out = []
    for c in itertools.product(*(range(dj) for dj in d)):
        y = [Fraction(cj, dj) for cj, dj in zip(c, d)]
        alpha = [sum((V[i][j] * y[j] for j in range(k)), Fraction(0)) for i in range(k)]
        alpha = tuple(a - floor(a) for a in alpha)
        point = tuple(
            sum((alpha[j] * fan.rays[cone[j]][r] for j in range(k)), Fraction(0)) for r in range(fan.rank)
        )
        assert all(x.denominator == 1 for x in point)
        out.append((tuple(int(x) for x in point), alpha))
    return out


def _as_box_element(cone: Cone, point: Vector, alpha: Sequence[Fraction]) -> BoxElement:
    support = tuple(i for i, a in zip(cone, alpha) if a)
    return BoxElement(point, support, tuple(a for a in alpha if a))


def box_of_cone(fan: StackyFan, cone: Sequence[int]) -> list[BoxElement]:
    """Box(C): the lattice points with coefficients in [0,1) on C's rays."""
    cone = tuple(sorted(cone))
    if not fan.is_cone(cone):
        raise ValueError(f"{list(cone)} is not a cone of the fan")
    return sorted(_as_box_element(cone, p, a) for p, a in _parallelepiped(fan, cone))


@lru_cache(maxsize=None)
def box_of_fan(fan: StackyFan) -> tuple[BoxElement, ...]:
    """Box of the whole fan: the zero element first, then the rest sorted
    lexicographically by lattice point."""
    seen: dict[Vector, BoxElement] = {}
    for c in fan.max_cones:
        for p, a in _parallelepiped(fan, c):
            seen.setdefault(p, _as_box_element(c, p, a))
    return tuple(sorted(seen.values(), key=lambda b: (any(b.point), b.point)))


class QuotientFan(NamedTuple):
    fan: StackyFan
    rays: tuple[int, ...]  # original index of each ray of the quotient fan
    projection: latlin.IntMatrix  # rho: N -> N', rows = rank of N'


def quotient_fan(fan: StackyFan, cone: Sequence[int]) -> QuotientFan:
    """The fan in N' = (N / span(C)) / torsion built from the link of C.

    Raises InvalidFanError if the image rays do not span a finite-index
    subgroup of N'.
    """
    return _quotient_fan(fan, tuple(sorted(cone)))


@lru_cache(maxsize=None)
def _quotient_fan(fan: StackyFan, cone: Cone) -> QuotientFan:
    if not fan.is_cone(cone):
        raise ValueError(f"{list(cone)} is not a cone of the fan")
    if not cone:
        return QuotientFan(fan, tuple(range(fan.n)), latlin.identity(fan.rank))
    U, _, _ = latlin.smith_normal_form(fan.ray_matrix(cone))
    rho = U[len(cone):]
    star = [c for c in fan.max_cones if set(cone) <= set(c)]
    link = sorted({i for c in star for i in c} - set(cone))
    index = {old: new for new, old in enumerate(link)}
    rays = tuple(latlin.matvec(rho, fan.rays[i]) for i in link)
    cones = tuple(tuple(index[i] for i in c if i not in cone) for c in star)
    quotient = StackyFan(fan.rank - len(cone), rays, cones)
    return QuotientFan(quotient, tuple(link), rho)


def lattice_points_of_degree_at_most(fan: StackyFan, D: Fraction | int) -> list[tuple[Vector, Fraction]]:
    """All lattice points of the support with degree <= D, with degrees.

    Each maximal cone contributes its parallelepiped points shifted by
    nonnegative integer combinations of its rays.  Sorted by (degree, point).
    """
    D = Fraction(D)
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    found: dict[Vector, Fraction] = {}
    for c in fan.max_cones:
        for base, alpha in _parallelepiped(fan, c):
            d0 = sum(alpha, Fraction(0))
            if d0 > D:
                continue
            budget = floor(D - d0)
            for m in _compositions_at_most(len(c), budget):
                p = tuple(base[r] + sum(mj * fan.rays[c[j]][r] for j, mj in enumerate(m)) for r in range(fan.rank))
                found.setdefault(p, d0 + sum(m))
    return sorted(((p, d) for p, d in found.items()), key=lambda item: (item[1], item[0]))


def _compositions_at_most(k: int, total: int):
    """Nonnegative integer k-tuples with sum <= total."""
    if k == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_at_most(k - 1, total - first):
            yield (first,) + rest


def support_is_convex(fan: StackyFan) -> bool | None:
    """Whether the support is a (convex) cone: True/False when decidable by
    the boundary-ridge test, None when the fan is not pure."""
    if not fan.is_pure:
        return None
    if fan.rank == 0 or fan.is_complete:
        return True
    for ridge, count in _ridge_counts(fan).items():
        if count != 1:
            continue
        normal = latlin.integer_kernel(latlin.transpose(fan.ray_matrix(ridge)), fan.rank)
        if len(normal) != 1:
            return False
        values = [sum(a * b for a, b in zip(normal[0], v)) for v in fan.rays]
        if not (all(x >= 0 for x in values) or all(x <= 0 for x in values)):
            return False
    return True
