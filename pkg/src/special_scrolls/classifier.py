"""Classification of special scrolls.

Two kinds of answers live here: the uniform description of special scrolls
of speciality one in any ``P^N`` (three cases by the size of ``N``), and the
finite lists of linearly normal special scrolls in ``P^3`` of genus 2 and 3,
together with the projection case analyses that produce them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .curve_divisors import CurveContext, canonical, canonical_shift, generic, plus_points
from .ruled_surface import (
    RuledSurface,
    ScrollModel,
    TrackedCurve,
    decomposable_scroll,
    unisecant,
)
from .tables import GENUS2, GENUS3, GENUS3_HYPERELLIPTIC, TableRow, ordered


class ClassificationError(ValueError):
    """Parameters outside the range a classification covers."""


@dataclass(frozen=True)
class SpecialCurve:
    source: str
    is_min_degree: bool
    linearly_normal: bool
    degree: int
    self_int: int


@dataclass(frozen=True)
class GenericScrollModel:
    g: int
    N: int
    d: int
    speciality: int
    case_id: int
    decomposable: bool
    e: int
    e_desc: str
    E0_desc: str
    linear_system: str
    special_curve: SpecialCurve
    min_self_int: int
    notes: tuple = ()


def case_of(g: int, N: int) -> int:
    if N >= 3 * g - 3:
        return 1
    if N >= g - 1:
        return 2
    return 3


def case_of_degree(g: int, d: int) -> int:
    """Same trichotomy read off the degree ``d = N + 2g - 2``."""
    if d >= 5 * g - 5:
        return 1
    if d >= 3 * g - 3:
        return 2
    return 3


def _check_range(g: int, N: int) -> None:
    if g < 2:
        raise ClassificationError(f"special scrolls of speciality one need g >= 2, got g={g}")
    if N < 3:
        raise ClassificationError(f"need N >= 3, got N={N}")


def min_curve_self_int_generic(g: int, N: int) -> int:
    """Smallest self-intersection of a unisecant on the surface of a generic special scroll.

    For ``N >= g - 1`` this is ``2g - 2 - N`` (the special directrix); below
    that the minimum is ``g - 1`` or ``g`` depending on the parity of ``N``.
    """
    _check_range(g, N)
    if N >= g - 1:
        return 2 * g - 2 - N
    return g - 1 if (N - (g - 1)) % 2 == 0 else g


def classify_generic(g: int, N: int) -> GenericScrollModel:
    _check_range(g, N)
    d = N + 2 * g - 2
    case = case_of(g, N)
    notes = []
    if case == 1:
        e = N - 2 * g + 2
        model = dict(decomposable=True, e_desc="K-b", E0_desc="O+O(K-b), b nonspecial generic of degree N",
                     linear_system="|X0+bf|")
        special = SpecialCurve("X0", True, True, 2 * g - 2, 2 * g - 2 - N)
        low = min(-e, e)
    elif case == 2:
        e = N - 2 * g + 2
        model = dict(decomposable=False, e_desc=f"deg e = {-e}", E0_desc="indecomposable",
                     linear_system="|X0+(K-e)f|")
        special = SpecialCurve("X0", True, True, 2 * g - 2, 2 * g - 2 - N)
        low = -e
    else:
        e = -(g - 1) if (N - (g - 1)) % 2 == 0 else -g
        model = dict(decomposable=False, e_desc=f"deg e = {-e}", E0_desc="indecomposable",
                     linear_system="|X0+(K-a)f|, a ~ pi_*(X0.Y)")
        special = SpecialCurve("Y", False, False, 2 * g - 2, 2 * g - 2 + N)
        low = -e
        notes.append(f"Y^2 = 2g-2+N = {2 * g - 2 + N} is recorded as stated; as a unisecant of "
                     f"self-intersection {2 * g - 2 + N} it would have degree {2 * g - 2 + N}, "
                     f"while the transform bookkeeping gives Y^2 = 2g-2-N = {2 * g - 2 - N}")
    return GenericScrollModel(g=g, N=N, d=d, speciality=1, case_id=case, e=e,
                              special_curve=special, min_self_int=low, notes=tuple(notes), **model)


def classify_p3(g: int, hyperelliptic: bool) -> list[TableRow]:
    """Linearly normal special scrolls in ``P^3`` of genus ``g`` (2 or 3)."""
    if g == 2:
        if not hyperelliptic:
            raise ClassificationError("every genus-2 curve is hyperelliptic")
        return ordered(GENUS2)
    if g == 3:
        return ordered(GENUS3_HYPERELLIPTIC if hyperelliptic else GENUS3)
    raise ClassificationError(f"tables exist for g = 2 and g = 3 only, got g={g}")


def stability_possible(g: int, d: int) -> bool:
    """False when the degree alone rules out a stable special ruled surface."""
    if g < 2:
        raise ClassificationError(f"need g >= 2, got g={g}")
    return d < 4 * g - 4


@dataclass(frozen=True)
class Degenerate:
    """The projection is not birational onto a scroll of the same genus."""

    reason: str


@dataclass(frozen=True)
class Rejected:
    """The configuration does not describe a projection from exactly the given points."""

    reason: str


Outcome = Union[ScrollModel, Degenerate, Rejected]


def _surface(curve: CurveContext, e: int, decomposable: bool, curves: Sequence[TrackedCurve],
             e_label: str) -> RuledSurface:
    return RuledSurface(base=curve, e_invariant=e, e_divisor=generic(-e, label=e_label),
                        decomposable=decomposable, tracked_curves=tuple(curves))


def _section(label: str, e: int, self_int: int, plane=None) -> TrackedCurve:
    return TrackedCurve(label, unisecant(e, self_int), self_int, plane_divisor=plane)


GENUS2_POINTS = ("X0", "X1", "generic", "fiber:A1", "fiber:A2", "singular:X1")


def genus2_projection(point: str, b_canonical: bool = False) -> Outcome:
    """Project the genus-2 scroll ``R_b`` (``b = K + A1 + A2``) in ``P^4`` from one point.

    ``point`` is one of ``X0``, ``X1`` (a smooth point of that curve),
    ``generic``, ``fiber:A1``/``fiber:A2`` (a point of the fiber over a base
    point of ``|X1|``, off ``X0`` and ``X1``) or ``singular:X1``.
    """
    if point not in GENUS2_POINTS:
        raise ClassificationError(f"unknown genus-2 projection point {point!r}; "
                                  f"expected one of {', '.join(GENUS2_POINTS)}")
    if b_canonical:
        return Degenerate("b ~ K: the scroll map is not birational and R_b is a rational ruled surface")
    curve = CurveContext(2, hyperelliptic=True)
    K = canonical(curve)
    if point == "singular:X1":
        return Degenerate("projection from the singular point of X1: the image is a rational "
                          "ruled surface and the map is not birational")
    if point == "X0":
        # X0 collapses to the vertex: a cone over a plane quartic, b' = K + P + Q
        b = canonical_shift(curve, generic(0), delta=2, label="K+P+Q")
        return decomposable_scroll(curve, e_div=generic(-4, label="-(K+P+Q)"), b=b,
                                   b_plus_e=generic(0, label="O"),
                                   notes=("cone over a nonspecial plane quartic",))
    if point.startswith("fiber:"):
        surface = _surface(curve, 1, False, [_section("X0", 1, -1, K)],
                           e_label="e'")
        H = unisecant(1, 5)
        return ScrollModel(surface=surface, H=H, degree=5, speciality=1, ambient_dim=3,
                           notes=(f"point in the fiber {point[6:]}: indecomposable",))
    b = generic(3, label="b-P", base_point_free=True)
    return decomposable_scroll(curve, e_div=canonical_shift(curve, b, label="K-b-P"), b=b,
                               b_plus_e=K, notes=("O+O(K-b-P)",))


def genus3_d7_projection(points: Sequence[str], hyperelliptic: bool = False) -> Outcome:
    """Project the genus-3 scroll ``R_b`` (``deg b = 6``) in ``P^6`` from three points spanning a plane.

    Each point is described by ``X0``, ``X1`` or ``generic``.
    """
    points = list(points)
    if len(points) != 3:
        raise ClassificationError(f"need exactly three points, got {len(points)}")
    bad = [p for p in points if p not in ("X0", "X1", "generic")]
    if bad:
        raise ClassificationError(f"unknown point descriptors {bad}")
    n0, n1 = points.count("X0"), points.count("X1")
    if n0 >= 2:
        return Rejected("two points on the plane curve X0: their line meets it in four points, "
                        "so the centre holds more than three points of the scroll")
    if hyperelliptic and n0 % 2:
        raise ClassificationError("on a hyperelliptic curve X0 maps to a double conic: "
                                  "the number of points on it must be even")
    if n1 == 3:
        return Rejected("three points on X1: their plane meets X1 in six points")
    curve = CurveContext(3, hyperelliptic)
    K = canonical(curve)
    if n0 == 1:
        e = 1
        decomposable = n1 == 2
        curves = [_section("X0", e, -1, plus_points(curve, K, -1, label="K-P1"))]
        if decomposable:
            curves.append(_section("X1", e, 1, generic(4, label="b-P2-P3")))
        note = "O(K-P1)+O(b-P2-P3)" if decomposable else "indecomposable, e=1"
    else:
        e = -1
        decomposable = False
        curves = [_section("X0", e, 1, K)]
        note = "indecomposable, e=-1"
    surface = _surface(curve, e, decomposable, curves, e_label="e'")
    return ScrollModel(surface=surface, H=unisecant(e, 7), degree=7, speciality=1, ambient_dim=3,
                       notes=(note,))


def matching_rows(model: ScrollModel, rows: Sequence[TableRow]) -> list[TableRow]:
    """Table rows with the same degree, speciality, ``e`` and splitting type as ``model``."""
    s = model.surface
    return [r for r in rows if (r.d, r.i, r.e, r.decomposable)
            == (model.degree, model.speciality, s.e_invariant, s.decomposable)]


def flagged_rows(rows: Sequence[TableRow]) -> list[TableRow]:
    return [r for r in rows if r.flagged_inconsistent]


def row_for_grass_type(key: tuple, rows: Sequence[TableRow]) -> Optional[TableRow]:
    hits = [r for r in rows if r.grass_type == key]
    return hits[0] if len(hits) == 1 else None


def _engine_points(tokens: Sequence[str]) -> list:
    from .elem_transform import PointSpec

    pts = []
    for n, tok in enumerate(tokens):
        if tok == "generic":
            pts.append(PointSpec(f"x{n + 1}"))
        elif tok.startswith("fiber:"):
            pts.append(PointSpec(tok[6:]))
        else:
            pts.append(PointSpec(f"x{n + 1}", frozenset({tok})))
    return pts


def engine_d7_projection(points: Sequence[str], hyperelliptic: bool = False) -> ScrollModel:
    """The same projection computed by transforming ``S_b`` point by point."""
    from .elem_transform import project_scroll
    from .ruled_surface import scroll_R_b

    curve = CurveContext(3, hyperelliptic)
    R = scroll_R_b(curve, generic(6, label="b", base_point_free=True))
    return project_scroll(R, _engine_points(points), span_dim=2)


def engine_genus2_projection(point: str) -> ScrollModel:
    from .elem_transform import project_scroll
    from .ruled_surface import scroll_R_b

    curve = CurveContext(2, hyperelliptic=True)
    b = canonical_shift(curve, generic(0), delta=2, label="K+A1+A2")
    R = scroll_R_b(curve, b, x1_base_fibers=("A1", "A2"))
    return project_scroll(R, _engine_points([point]), span_dim=0)
