"""Numerical intersection theory on geometrically ruled surfaces.

Classes are written ``a*X0 + b*f`` where ``X0`` is the section of minimal
self-intersection ``-e`` and ``f`` a fiber. Curves are tracked by label and
incidence only; no coordinates are involved anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .curve_divisors import (
    CurveContext,
    DivisorClass,
    DivisorError,
    Kind,
    canonical,
    canonical_shift,
    generic,
    h0_h1,
    is_special,
    plus_points,
)


class SurfaceConsistencyError(RuntimeError):
    """Stored and recomputed intersection data disagree (a bookkeeping bug)."""


class DegenerateWarning(UserWarning):
    """The linear system does not map the surface birationally."""


@dataclass(frozen=True)
class NumClass:
    a: int
    b: int

    def __add__(self, other: NumClass) -> NumClass:
        return NumClass(self.a + other.a, self.b + other.b)

    def __mul__(self, k: int) -> NumClass:
        return NumClass(self.a * k, self.b * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.a}X0{self.b:+d}f"


SECTION = NumClass(1, 0)
FIBER = NumClass(0, 1)


def intersection_form(e: int, c1: NumClass, c2: NumClass) -> int:
    return -e * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b


def unisecant(e: int, self_int: int) -> NumClass:
    """The class ``X0 + b f`` with the given self-intersection."""
    if (self_int + e) % 2:
        raise SurfaceConsistencyError(
            f"a unisecant on a surface with e={e} cannot have self-intersection {self_int}")
    return NumClass(1, (self_int + e) // 2)


@dataclass(frozen=True)
class TrackedCurve:
    """A unisecant curve followed through transformations.

    ``family_dim`` is the dimension of the family the curve moves in (0 for a
    fixed curve such as ``X0``). Members of a moving family are pinned in the
    fibers listed in ``blocked_fibers`` (base points of the family), so they
    cannot be made to pass through other points of those fibers.
    """

    label: str
    num_class: NumClass
    self_int: int
    irreducible: bool = True
    plane_divisor: Optional[DivisorClass] = None
    family_dim: int = 0
    blocked_fibers: frozenset = frozenset()


@dataclass(frozen=True)
class RuledSurface:
    base: CurveContext
    e_invariant: int
    e_divisor: DivisorClass
    decomposable: Optional[bool]
    tracked_curves: tuple = ()
    anti_e: Optional[DivisorClass] = None
    # lower bound on the self-intersection of irreducible unisecants that are not tracked
    untracked_floor: Optional[int] = None

    def __post_init__(self):
        if self.e_divisor.degree != -self.e_invariant:
            raise SurfaceConsistencyError(
                f"deg(e_divisor)={self.e_divisor.degree} but e={self.e_invariant}")
        seen = set()
        for c in self.tracked_curves:
            if c.label in seen:
                raise SurfaceConsistencyError(f"duplicate tracked curve {c.label}")
            seen.add(c.label)
            recomputed = intersection_form(self.e_invariant, c.num_class, c.num_class)
            if recomputed != c.self_int:
                raise SurfaceConsistencyError(
                    f"{c.label}: stored self-intersection {c.self_int}, class gives {recomputed}")

    @property
    def genus(self) -> int:
        return self.base.genus

    def curve(self, label: str) -> TrackedCurve:
        for c in self.tracked_curves:
            if c.label == label:
                return c
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [c.label for c in self.tracked_curves]

    def intersect(self, c1: NumClass, c2: NumClass) -> int:
        return intersection_form(self.e_invariant, c1, c2)

    def min_self_int(self) -> int:
        return min(c.self_int for c in self.tracked_curves if c.irreducible)


def intersect(surface: RuledSurface, c1: NumClass, c2: NumClass) -> int:
    return surface.intersect(c1, c2)


def _is_canonical(div: DivisorClass) -> bool:
    if div.kind is Kind.CANONICAL:
        return True
    return (div.kind is Kind.CANONICAL_SHIFT and div.sign == 1 and div.delta == 0
            and div.base.kind is Kind.GENERIC_EFFECTIVE and div.base.degree == 0
            and not div.base.nontrivial)


def _b_minus_K(curve: CurveContext, b: DivisorClass) -> DivisorClass:
    if _is_canonical(b):
        return generic(0, label="O")
    if (b.kind is Kind.CANONICAL_SHIFT and b.sign == 1 and b.base.degree == 0
            and not b.base.nontrivial):
        # b = K + (delta generic points): b - K is effective
        return generic(b.delta, label=f"{b.describe()}-K")
    return canonical_shift(curve, b, sign=-1, label=f"{b.describe()}-K")


def make_S_b(curve: CurveContext, b: DivisorClass, *, c_max: int = 6,
             x1_base_fibers: Sequence[str] = ()) -> RuledSurface:
    """The decomposable surface ``P(O + O(b - K))`` with its unisecant families.

    Tracks ``X0`` (plane divisor ``K``), ``X1`` (plane divisor ``b``) and one
    member of each family ``Y_c = X1 + c f`` for ``1 <= c <= c_max``.
    ``x1_base_fibers`` names the fibers holding the base points of ``|X1|``
    when that system moves (``b - K`` effective).
    """
    g = curve.genus
    if b.degree < 2 * g - 2:
        raise DivisorError(f"deg b = {b.degree} < 2g-2 = {2 * g - 2}")
    if g == 2 and _is_canonical(b):
        warnings.warn("b ~ K in genus 2: the scroll map is not birational", DegenerateWarning,
                      stacklevel=2)
    e = b.degree - (2 * g - 2)
    e_div = canonical_shift(curve, b, label=f"K-({b.describe()})")
    anti_e = _b_minus_K(curve, b)
    curves = [
        TrackedCurve("X0", SECTION, -e, plane_divisor=canonical(curve)),
        TrackedCurve("X1", NumClass(1, e), e, plane_divisor=b,
                     family_dim=h0_h1(curve, anti_e)[0],
                     blocked_fibers=frozenset(x1_base_fibers)),
    ]
    for c in range(1, c_max + 1):
        dim = c + h0_h1(curve, plus_points(curve, anti_e, c))[0]
        curves.append(TrackedCurve(f"Y{c}", NumClass(1, e + c), e + 2 * c,
                                   plane_divisor=plus_points(curve, b, c), family_dim=dim))
    return RuledSurface(base=curve, e_invariant=e, e_divisor=e_div, decomposable=True,
                        tracked_curves=tuple(curves), anti_e=anti_e,
                        untracked_floor=e + 2 * (c_max + 1))


def family_Y_dim(surface: RuledSurface, c: int) -> int:
    """Dimension of the family ``F_c`` of curves ``Y_c = X1 + c f`` on ``S_b``.

    The family fibers over ``Sym^c X`` with fibers of dimension
    ``h0(-e + c)``. This is ``2c`` when ``deg b = 3g - 3``.
    """
    if c < 1:
        raise ValueError("c must be positive")
    if surface.anti_e is None:
        raise ValueError("family dimensions are only known on a surface built by make_S_b")
    return c + h0_h1(surface.base, plus_points(surface.base, surface.anti_e, c))[0]


@dataclass(frozen=True)
class FamilyDim:
    dim: int


@dataclass(frozen=True)
class NoneGeneric:
    note: str = "no irreducible member through the points; at most finitely many in special position"


def family_through_points(c: int, k: int) -> FamilyDim | NoneGeneric:
    """Members of ``F_c`` (``deg b = 3g - 3``) through ``k`` generic points."""
    if c < 1 or k < 0:
        raise ValueError("need c >= 1 and k >= 0")
    if k <= 2 * c:
        return FamilyDim(2 * c - k)
    return NoneGeneric()


def decomposable_witness(surface: RuledSurface) -> Optional[bool]:
    """Two irreducible unisecants with self-intersections summing to zero.

    ``None`` when no pair is found among the tracked curves and the untracked
    ones are not bounded well enough to exclude one.
    """
    irr = [c for c in surface.tracked_curves if c.irreducible]
    values = sorted(c.self_int for c in irr)
    for i, s in enumerate(values):
        if -s in values[i + 1:]:
            return True
    if not irr:
        return None
    lowest = values[0]
    floor = surface.untracked_floor
    if floor is not None and floor > abs(lowest):
        return False
    return None


@dataclass(frozen=True)
class CurveEntry:
    """One directrix of a scroll: ``multiplicity * C_degree`` spanning ``P^span``."""

    label: str
    degree: int
    self_int: int
    family_dim: int
    special: Optional[bool]
    span: Optional[int]
    multiplicity: Optional[int]
    is_minimum: bool


def image_multiplicity(curve: CurveContext, plane: DivisorClass, span: int) -> int:
    if span == 1:
        return plane.degree
    if curve.hyperelliptic and _is_canonical(plane):
        return 2
    return 1


@dataclass(frozen=True)
class ScrollModel:
    surface: RuledSurface
    H: NumClass
    degree: int
    speciality: int
    ambient_dim: int
    b: Optional[DivisorClass] = None
    notes: tuple = ()

    def __post_init__(self):
        g = self.surface.genus
        if self.degree - 2 * g + 1 + self.speciality != self.ambient_dim:
            raise SurfaceConsistencyError(
                f"Riemann-Roch fails: d={self.degree}, g={g}, i={self.speciality}, "
                f"N={self.ambient_dim}")
        if self.surface.intersect(self.H, self.H) != self.degree:
            raise SurfaceConsistencyError("degree differs from H.H")

    @property
    def genus(self) -> int:
        return self.surface.genus

    def rr_holds(self) -> bool:
        return self.degree - 2 * self.genus + 1 + self.speciality == self.ambient_dim

    def curve_degree(self, label: str) -> int:
        return self.surface.intersect(self.surface.curve(label).num_class, self.H)

    def min_curve_report(self) -> list[CurveEntry]:
        """Tracked directrices sorted by degree (ties: larger family first)."""
        curve = self.surface.base
        entries = []
        for c in self.surface.tracked_curves:
            if not c.irreducible:
                continue
            deg = self.surface.intersect(c.num_class, self.H)
            special = span = mult = None
            if c.plane_divisor is not None:
                try:
                    h0, h1 = h0_h1(curve, c.plane_divisor)
                except DivisorError:
                    pass
                else:
                    special = h1 > 0
                    span = min(h0 - 1, self.ambient_dim)
                    mult = image_multiplicity(curve, c.plane_divisor, span) if deg > 0 else None
            entries.append(CurveEntry(c.label, deg, c.self_int, c.family_dim, special, span,
                                      mult, False))
        if not entries:
            return []
        low = min(x.degree for x in entries)
        entries = [replace(x, is_minimum=x.degree == low) for x in entries]
        return sorted(entries, key=lambda x: (x.degree, -x.family_dim, x.label))


def decomposable_scroll(curve: CurveContext, e_div: DivisorClass, b: DivisorClass,
                        b_plus_e: DivisorClass, notes: Iterable[str] = ()) -> ScrollModel:
    """Scroll given by ``|X0 + b f|`` on ``P(O + O(e))``.

    ``b_plus_e`` is the class of ``b + e``; the hyperplane sheaf pushes down to
    ``O(b) + O(b + e)``, which gives ambient dimension and speciality.
    """
    if b_plus_e.degree != b.degree + e_div.degree:
        raise DivisorError("b_plus_e has the wrong degree")
    e = -e_div.degree
    h0_b, h1_b = h0_h1(curve, b)
    h0_be, h1_be = h0_h1(curve, b_plus_e)
    surface = RuledSurface(
        base=curve, e_invariant=e, e_divisor=e_div, decomposable=True,
        tracked_curves=(TrackedCurve("X0", SECTION, -e, plane_divisor=b_plus_e),),
    )
    H = NumClass(1, b.degree)
    return ScrollModel(surface=surface, H=H, degree=surface.intersect(H, H),
                       speciality=h1_b + h1_be, ambient_dim=h0_b + h0_be - 1, b=b,
                       notes=tuple(notes))


def scroll_R_b(curve: CurveContext, b: DivisorClass, **kwargs) -> ScrollModel:
    """The scroll ``R_b`` defined by ``|X0 + b f|`` on ``S_b``."""
    surface = make_S_b(curve, b, **kwargs)
    K = canonical(curve)
    h0_b, h1_b = h0_h1(curve, b)
    H = NumClass(1, b.degree)
    return ScrollModel(surface=surface, H=H, degree=surface.intersect(H, H),
                       speciality=h1_b + 1, ambient_dim=h0_b + h0_h1(curve, K)[0] - 1, b=b)


def is_special_curve(curve: CurveContext, tracked: TrackedCurve) -> Optional[bool]:
    if tracked.plane_divisor is None:
        return None
    return is_special(curve, tracked.plane_divisor)
