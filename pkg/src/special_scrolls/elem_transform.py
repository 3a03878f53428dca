"""Elementary transformations of ruled surfaces and projections of scrolls.

Transforming at a point ``x`` changes the self-intersection of every tracked
unisecant ``C`` by ``-1`` when ``x`` lies on ``C`` and by ``+1`` otherwise, so a
curve containing ``l`` of ``k`` points ends with ``C^2 - l + (k - l)``.
Projecting a scroll from ``k`` simple points is the same operation on the
underlying surface, with the hyperplane class playing the role of a curve
through every point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .curve_divisors import (
    DivisorClass,
    DivisorError,
    Kind,
    ScrollNumericsError,
    canonical,
    generic,
    h0_h1,
    is_special,
    plus_points,
)
from .ruled_surface import (
    RuledSurface,
    ScrollModel,
    SurfaceConsistencyError,
    TrackedCurve,
    decomposable_witness,
    image_multiplicity,
    unisecant,
)


class TransformError(ValueError):
    """Point data that cannot define an elementary transformation."""


@dataclass(frozen=True)
class PointSpec:
    """A point to transform at.

    ``on_curve`` lists the tracked curves through the point. A ``generic``
    point is otherwise in general position: it avoids every fixed curve not
    listed and imposes one independent condition on each moving family, so a
    family of dimension ``D`` can be made to pass through ``D`` such points.
    """

    fiber: str
    on_curve: frozenset = frozenset()
    generic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "on_curve", frozenset(self.on_curve))


def _pair_number(c1: TrackedCurve, c2: TrackedCurve) -> int:
    # two unisecants: C.D = (C^2 + D^2) / 2
    return (c1.self_int + c2.self_int) // 2


def _incidences(surface: RuledSurface, points: Sequence[PointSpec]) -> dict[str, set[int]]:
    fibers = [p.fiber for p in points]
    if len(set(fibers)) != len(fibers):
        dup = sorted({f for f in fibers if fibers.count(f) > 1})
        raise TransformError(f"two points in the same fiber {dup}: not an elementary transformation")
    known = set(surface.labels())
    for p in points:
        unknown = p.on_curve - known
        if unknown:
            raise TransformError(f"point in fiber {p.fiber} lies on unknown curves {sorted(unknown)}")

    inc = {c.label: {i for i, p in enumerate(points) if c.label in p.on_curve}
           for c in surface.tracked_curves}
    irreducible = [c for c in surface.tracked_curves if c.irreducible]
    for c1, c2 in itertools.combinations(irreducible, 2):
        shared = len(inc[c1.label] & inc[c2.label])
        if shared > _pair_number(c1, c2):
            raise TransformError(
                f"{shared} points on both {c1.label} and {c2.label}, which meet in "
                f"{_pair_number(c1, c2)} points")

    fixed = [c for c in irreducible if c.family_dim == 0]
    for t in surface.tracked_curves:
        room = t.family_dim - len(inc[t.label])
        if room <= 0:
            continue
        for i, p in enumerate(points):
            if room == 0:
                break
            if not p.generic or t.label in p.on_curve or p.fiber in t.blocked_fibers:
                continue
            if any(i in inc[c.label] and len(inc[c.label] & inc[t.label]) >= _pair_number(c, t)
                   for c in fixed if c.label != t.label):
                continue
            inc[t.label].add(i)
            room -= 1
    return inc


def transform(surface: RuledSurface, points: Sequence[PointSpec]) -> RuledSurface:
    """Elementary transformation at points lying in pairwise distinct fibers."""
    k = len(points)
    if k == 0:
        return surface
    inc = _incidences(surface, points)
    curve = surface.base

    updated = []
    for c in surface.tracked_curves:
        l = len(inc[c.label])
        plane = c.plane_divisor
        if plane is not None:
            try:
                plane = plus_points(curve, plane, -l)
            except DivisorError:
                plane = None
        updated.append((c, c.self_int - l + (k - l), max(0, c.family_dim - l), plane))

    irreducible = [s for c, s, _, _ in updated if c.irreducible]
    e_new = -min(irreducible) if irreducible else surface.e_invariant + k
    curves = tuple(
        replace(c, num_class=unisecant(e_new, s), self_int=s, family_dim=dim, plane_divisor=plane)
        for c, s, dim, plane in updated)

    floor = None if surface.untracked_floor is None else surface.untracked_floor - k
    draft = RuledSurface(base=curve, e_invariant=e_new, e_divisor=generic(-e_new, label="e'"),
                         decomposable=None, tracked_curves=curves, untracked_floor=floor)
    decomposable = decomposable_witness(draft)
    e_div = draft.e_divisor
    if decomposable:
        low = draft.curve(_lowest_label(draft))
        partner = next(c for c in curves
                       if c.irreducible and c.self_int == -low.self_int and c is not low)
        if low.plane_divisor is not None and partner.plane_divisor is not None:
            e_div = generic(-e_new, label=f"({low.plane_divisor.describe()})"
                                          f"-({partner.plane_divisor.describe()})")
    return replace(draft, decomposable=decomposable, e_divisor=e_div)


def _lowest_label(surface: RuledSurface) -> str:
    return min((c for c in surface.tracked_curves if c.irreducible),
               key=lambda c: (c.self_int, c.family_dim != 0, c.label)).label


def transform_self_ints(surface: RuledSurface, points: Sequence[PointSpec]) -> dict[str, int]:
    new = transform(surface, points)
    return {c.label: c.self_int for c in new.tracked_curves}


def project_scroll(scroll: ScrollModel, points: Sequence[PointSpec],
                   span_dim: Optional[int] = None) -> ScrollModel:
    """Project from ``k`` simple points of the scroll spanning ``P^span_dim``.

    The degree drops by ``k`` and the ambient dimension by ``span_dim + 1``
    (default: the points are independent, ``span_dim = k - 1``).
    """
    k = len(points)
    if k == 0:
        return scroll
    if span_dim is None:
        span_dim = k - 1
    if not 0 <= span_dim <= k - 1:
        raise TransformError(f"{k} points cannot span a P^{span_dim}")
    if span_dim + 1 >= scroll.ambient_dim:
        raise TransformError("projection centre fills the ambient space")

    curve = scroll.surface.base
    for c in scroll.surface.tracked_curves:
        if c.plane_divisor is None or c.family_dim:
            continue
        h0 = h0_h1(curve, c.plane_divisor)[0]
        mult = image_multiplicity(curve, c.plane_divisor, min(h0 - 1, scroll.ambient_dim))
        on = sum(c.label in p.on_curve for p in points)
        if mult > 1 and on % mult:
            raise TransformError(
                f"the image of {c.label} is a {mult}-fold curve; the number of projection "
                f"points on it must be a multiple of {mult}, got {on}")

    surface = transform(scroll.surface, points)
    degree = scroll.degree - k
    ambient = scroll.ambient_dim - span_dim - 1
    i = ambient - degree + 2 * curve.genus - 1
    if i < 0:
        raise TransformError(f"projection would have negative speciality {i}")
    return ScrollModel(surface=surface, H=unisecant(surface.e_invariant, degree), degree=degree,
                       speciality=i, ambient_dim=ambient,
                       notes=scroll.notes + (f"projected from {k} points spanning P^{span_dim}",))


@dataclass(frozen=True)
class MinCurveCase:
    label: str
    self_int: int
    family_dim: int
    is_minimum: bool


@dataclass(frozen=True)
class MinCurveReport:
    g: int
    k: int
    j: int
    cases: tuple
    decomposable_after: bool

    @property
    def minimum(self) -> int:
        return min(c.self_int for c in self.cases)


def generic_transform_report(g: int, k: int) -> MinCurveReport:
    """Minimal curves after transforming ``S_b`` (``deg b = 3g - 3``) at ``k`` generic points."""
    if g < 2:
        raise ValueError("the generic report needs g >= 2")
    if k < 0:
        raise ValueError("k must be non-negative")
    j = k % 2
    if k == 0:
        cases = (MinCurveCase("X0", 1 - g, 0, True), MinCurveCase("X1", g - 1, 0, False))
        return MinCurveReport(g, k, j, cases, True)
    family = g - 1 + j
    if k <= 2 * g - 2:
        x0 = 1 - g + k
        cases = (MinCurveCase("X0", x0, 0, True),
                 MinCurveCase(f"Y{(k + j) // 2}", family, j, family == x0))
    else:
        cases = (MinCurveCase(f"Y{(k + j) // 2}", family, j, True),)
    return MinCurveReport(g, k, j, cases, False)


def reduce_to_Rb(g: int, N: int, d: int) -> tuple[int, int, int]:
    """``(deg b, #points, span)`` exhibiting a special scroll as a projection of ``R_b``."""
    if N < 3:
        raise ScrollNumericsError(f"need N >= 3, got {N}")
    i = N - d + 2 * g - 1
    if i < 1:
        raise ScrollNumericsError(
            f"degree {d} exceeds 2g+N-2 = {2 * g + N - 2}: the scroll cannot be special")
    points = 4 * g + N - 5 - d
    if points < 0:
        raise ScrollNumericsError(f"negative number of projection points ({points})")
    return 2 * g + N - 3, points, 2 * g - 4


def explicit_Rb_points(scroll: ScrollModel, xa: str, xb: str) -> list[PointSpec]:
    """Points whose elementary transformation turns ``scroll`` back into ``S_b``.

    ``xa`` is the special directrix and ``xb`` a unisecant whose plane divisor
    has degree at most ``2g + N - 3``. The points are those of ``xa . xb``, of
    ``xa`` over ``Q_1..Q_m`` and of ``xb`` over ``P_1..P_l`` with
    ``P_1 + ... + P_l ~ K - a1`` and ``b ~ Q_1 + ... + Q_m + a2``.
    """
    curve = scroll.surface.base
    g, N = curve.genus, scroll.ambient_dim
    ca, cb = scroll.surface.curve(xa), scroll.surface.curve(xb)
    a1, a2 = ca.plane_divisor, cb.plane_divisor
    if a1 is None or a2 is None:
        raise TransformError("both curves need a plane divisor")
    if not is_special(curve, a1):
        raise TransformError(f"{xa} is not special")
    l = 2 * g - 2 - a1.degree
    m = 2 * g + N - 3 - a2.degree
    if l < 0:
        raise TransformError(f"deg(K - a1) = {l} < 0")
    if m < 0:
        raise TransformError(f"deg a2 = {a2.degree} exceeds 2g+N-3 = {2 * g + N - 3}")
    meet = scroll.surface.intersect(ca.num_class, cb.num_class)
    if meet < 0:
        raise TransformError(f"{xa} and {xb} have negative intersection {meet}")
    pts = [PointSpec(f"{xa}.{xb}#{n}", frozenset({xa, xb}), generic=False) for n in range(meet)]
    pts += [PointSpec(f"Q#{n}", frozenset({xa}), generic=False) for n in range(m)]
    pts += [PointSpec(f"P#{n}", frozenset({xb}), generic=False) for n in range(l)]
    return pts


@dataclass(frozen=True)
class RbIdentities:
    xa_dot_xb: int
    xa_plane: DivisorClass
    xb_plane: DivisorClass
    b_degree: int

    @property
    def ok(self) -> bool:
        return (self.xa_dot_xb == 0 and self.xa_plane.kind is Kind.CANONICAL
                and self.xb_plane.degree == self.b_degree)


def rb_identities(scroll: ScrollModel, xa: str, xb: str,
                  points: Sequence[PointSpec]) -> RbIdentities:
    """The three identities satisfied after transforming at ``points``.

    The intersection number comes from :func:`transform`. Each plane divisor
    gains the fibers of the points not on its curve: ``a1 + P_1 + ... + P_l``
    is ``K`` exactly when its degree reaches ``2g - 2``.
    """
    curve = scroll.surface.base
    g, N = curve.genus, scroll.ambient_dim
    after = transform(scroll.surface, points)
    meet = after.intersect(after.curve(xa).num_class, after.curve(xb).num_class)
    a1 = scroll.surface.curve(xa).plane_divisor
    a2 = scroll.surface.curve(xb).plane_divisor
    deg_a = a1.degree + sum(xa not in p.on_curve for p in points)
    deg_b = a2.degree + sum(xb not in p.on_curve for p in points)
    xa_plane = canonical(curve) if deg_a == 2 * g - 2 else generic(deg_a)
    xb_plane = generic(deg_b, label="b", birationally_very_ample=True)
    return RbIdentities(meet, xa_plane, xb_plane, 2 * g + N - 3)
