"""Divisor classes on an abstract smooth curve.

Nothing here carries coordinates. A divisor class is described by its degree
and by how special it is allowed to be: a sum of generic points, the
canonical class, a twist of the canonical class, or a class whose ``h0`` the
caller states outright. ``h0`` is then read off a genericity model and ``h1``
always follows from Riemann-Roch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional


class DivisorError(ValueError):
    """Inconsistent divisor or curve data."""


class ScrollNumericsError(ValueError):
    """Parameters that do not describe a special scroll."""


@dataclass(frozen=True)
class CurveContext:
    genus: int
    hyperelliptic: bool = False

    def __post_init__(self):
        if self.genus < 0:
            raise DivisorError(f"genus must be non-negative, got {self.genus}")
        if self.hyperelliptic and self.genus < 2:
            raise DivisorError("only curves of genus >= 2 can be hyperelliptic")

    @property
    def canonical_degree(self) -> int:
        return 2 * self.genus - 2


class Kind(enum.Enum):
    GENERIC_EFFECTIVE = "generic_effective"
    CANONICAL = "canonical"
    CANONICAL_SHIFT = "canonical_shift"
    EXPLICIT_SPECIAL = "explicit_special"


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class up to the data needed for ``h0``/``h1``.

    ``CANONICAL_SHIFT`` stands for ``sign * (K - base) + delta`` where
    ``delta`` counts extra generic points. With ``sign=+1`` and ``delta=0`` it
    is the residual ``K - base`` and Serre duality gives ``h0 = h1(base)``;
    every other shift is treated as a generic line bundle of its degree.

    ``nontrivial`` only matters for degree-0 generic classes such as ``Q - P``
    with ``P != Q``: it forces ``h0 = 0`` instead of the trivial class.
    """

    degree: int
    kind: Kind
    base: Optional["DivisorClass"] = None
    delta: int = 0
    sign: int = 1
    h0_declared: Optional[int] = None
    nontrivial: bool = False
    base_point_free: Optional[bool] = None
    birationally_very_ample: Optional[bool] = None
    label: str = field(default="", compare=False)

    def describe(self) -> str:
        if self.label:
            return self.label
        if self.kind is Kind.CANONICAL:
            return "K"
        if self.kind is Kind.CANONICAL_SHIFT:
            inner = f"K-({self.base.describe()})"
            text = inner if self.sign > 0 else f"-({inner})"
            if self.delta:
                text += f"{self.delta:+d}pts"
            return text
        return f"D{self.degree}"


def generic(degree: int, *, nontrivial: bool = False, label: str = "", **flags) -> DivisorClass:
    """Sum of ``degree`` generic points (or a generic class of negative degree)."""
    if nontrivial and degree != 0:
        raise DivisorError("the nontrivial marker only applies to degree-0 classes")
    return DivisorClass(degree=degree, kind=Kind.GENERIC_EFFECTIVE, nontrivial=nontrivial,
                        label=label, **flags)


def canonical(curve: CurveContext, label: str = "K") -> DivisorClass:
    return DivisorClass(degree=curve.canonical_degree, kind=Kind.CANONICAL,
                        base_point_free=curve.genus >= 1, label=label)


def canonical_shift(curve: CurveContext, base: DivisorClass, delta: int = 0, sign: int = 1,
                    label: str = "") -> DivisorClass:
    if sign not in (1, -1):
        raise DivisorError("sign must be +1 or -1")
    degree = sign * (curve.canonical_degree - base.degree) + delta
    return DivisorClass(degree=degree, kind=Kind.CANONICAL_SHIFT, base=base, delta=delta,
                        sign=sign, label=label)


def explicit_special(curve: CurveContext, degree: int, h0: int, label: str = "") -> DivisorClass:
    div = DivisorClass(degree=degree, kind=Kind.EXPLICIT_SPECIAL, h0_declared=h0, label=label)
    h0_h1(curve, div)  # validates
    return div


def plus_points(curve: CurveContext, div: DivisorClass, count: int, label: str = "") -> DivisorClass:
    """``div`` plus ``count`` further generic points (``count`` may be negative)."""
    if count == 0:
        return div
    if div.kind is Kind.GENERIC_EFFECTIVE:
        return generic(div.degree + count, label=label)
    if div.kind is Kind.CANONICAL_SHIFT:
        return canonical_shift(curve, div.base, div.delta + count, div.sign, label=label)
    if div.kind is Kind.CANONICAL:
        if count < 0:
            # K minus generic points is a residual class, h0 = g - #points
            return canonical_shift(curve, generic(-count), label=label)
        return canonical_shift(curve, generic(0), delta=count, label=label)
    raise DivisorError(f"cannot add generic points to an explicitly special class {div.describe()}")


def _generic_bundle_h0(curve: CurveContext, degree: int) -> int:
    return max(0, degree - curve.genus + 1)


def h0(curve: CurveContext, div: DivisorClass) -> int:
    g = curve.genus
    d = div.degree
    if div.kind is Kind.CANONICAL:
        if d != curve.canonical_degree:
            raise DivisorError("canonical class with wrong degree")
        return g
    if div.kind is Kind.GENERIC_EFFECTIVE:
        if d < 0:
            return 0
        if d == 0:
            return 0 if div.nontrivial else 1
        return max(1, d - g + 1)
    if div.kind is Kind.EXPLICIT_SPECIAL:
        return div.h0_declared
    # canonical shift
    if div.sign == 1 and div.delta == 0:
        return h0_h1(curve, div.base)[1]
    return _generic_bundle_h0(curve, d)


def h0_h1(curve: CurveContext, div: DivisorClass) -> tuple[int, int]:
    """Return ``(h0, h1)``; ``h0 - h1 == degree - g + 1`` always holds."""
    a = h0(curve, div)
    b = a - div.degree - 1 + curve.genus
    if a < 0 or b < 0:
        raise DivisorError(
            f"h0={a} for a degree-{div.degree} class on a genus-{curve.genus} curve "
            f"would force h1={b} < 0")
    return a, b


def is_special(curve: CurveContext, div: DivisorClass) -> bool:
    return h0_h1(curve, div)[1] > 0


def scroll_numerics(g: int, d: int, i: int) -> int:
    """Dimension ``N`` of the space spanned by a linearly normal scroll."""
    if g < 0 or d < 1 or i < 0:
        raise ScrollNumericsError(f"need g >= 0, d >= 1, i >= 0 (got g={g}, d={d}, i={i})")
    return d - 2 * g + 1 + i


def speciality_from(g: int, d: int, N: int, require_nondegenerate: bool = True) -> int:
    if require_nondegenerate and N < 3:
        raise ScrollNumericsError(f"a nondegenerate scroll needs N >= 3, got N={N}")
    i = N - d + 2 * g - 1
    if i < 0:
        raise ScrollNumericsError(f"negative speciality {i} for g={g}, d={d}, N={N}")
    return i


def speciality_degree_bound(g: int, N: int) -> int:
    """Largest degree a special scroll of genus ``g`` in ``P^N`` can have."""
    return 2 * g + N - 2
