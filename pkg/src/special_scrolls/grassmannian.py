"""Curves in the Grassmannian of lines of P^3 and the scrolls they sweep.

A scroll in P^3 is a curve on the quadric G(1,3) in P^5. A curve spanning a
P^3 lies on the intersection of G(1,3) with that P^3: a smooth quadric or a
quadric cone. A plane curve lies in an alpha-plane (lines through a point,
giving a cone) or a beta-plane (lines in a plane, a degenerate scroll).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .curve_divisors import CurveContext, canonical, generic, h0_h1


class Locus(enum.Enum):
    ALPHA_PLANE = "alpha-plane"
    BETA_PLANE = "beta-plane"
    SMOOTH_QUADRIC = "smooth-quadric"
    QUADRIC_CONE = "quadric-cone"


@dataclass(frozen=True)
class GrassCurveType:
    locus: Locus
    degree: int
    singular_count: int = 0
    a1: Optional[int] = None
    a2: Optional[int] = None
    a: Optional[int] = None
    vertex_mult: int = 0
    scroll_note: str = ""

    def __post_init__(self):
        if self.locus is Locus.SMOOTH_QUADRIC and self.a1 + self.a2 != self.degree:
            raise ValueError(f"type ({self.a1},{self.a2}) does not have degree {self.degree}")
        if self.locus is Locus.QUADRIC_CONE:
            expected = vertex_multiplicity(self.degree, self.a)
            if self.vertex_mult != expected:
                raise ValueError(f"vertex multiplicity {self.vertex_mult}, expected {expected}")

    def key(self) -> tuple:
        if self.locus is Locus.SMOOTH_QUADRIC:
            return ("quadric", self.a1, self.a2, self.singular_count)
        if self.locus is Locus.QUADRIC_CONE:
            return ("cone", self.a, self.singular_count)
        return (self.locus.value, self.degree, self.singular_count)


def quadric_genus(a1: int, a2: int, n: int) -> int:
    """Genus of a type ``(a1, a2)`` curve on a smooth quadric with ``n`` nodes.

    A negative value means no such irreducible curve exists.
    """
    if a1 < 1 or a2 < 1:
        raise ValueError("a1 and a2 must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    return (a1 - 1) * (a2 - 1) - n


def cone_genus(d: int, a: int, n: int) -> int:
    """Genus of a degree-``d`` curve on a quadric cone meeting each line ``a`` times."""
    if a <= 1:
        raise ValueError(f"a must exceed 1, got {a}")
    if n < 0:
        raise ValueError("n must be non-negative")
    return (a - 1) * (d - a - 1) - n


def vertex_multiplicity(d: int, a: int) -> int:
    """Multiplicity of the cone vertex on the curve (0 if it is not a singular point)."""
    if a <= 1:
        raise ValueError(f"a must exceed 1, got {a}")
    return d - 2 * a if 2 * a < d - 1 else 0


def plane_genus_bound(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def enumerate_candidates(g: int, d: int) -> list[GrassCurveType]:
    """Every Grassmannian curve type of genus ``g`` and degree ``d`` giving a cone or a scroll in P^3.

    Beta-plane curves are left out: they sweep a plane.
    """
    if g < 1 or d < 3:
        raise ValueError("need g >= 1 and d >= 3")
    found = []
    delta = plane_genus_bound(d) - g
    if delta >= 0:
        found.append(GrassCurveType(Locus.ALPHA_PLANE, d, singular_count=delta,
                                    scroll_note=f"cone over a plane curve of degree {d}"))
    for a1 in range(1, d // 2 + 1):
        a2 = d - a1
        n = (a1 - 1) * (a2 - 1) - g
        if n >= 0:
            found.append(GrassCurveType(Locus.SMOOTH_QUADRIC, d, singular_count=n, a1=a1, a2=a2,
                                        scroll_note=f"scroll over P(O(a1)+O(a2)), {n} double generators"))
    for a in range(2, d // 2 + 1):
        n = (a - 1) * (d - a - 1) - g
        if n >= 0:
            found.append(GrassCurveType(Locus.QUADRIC_CONE, d, singular_count=n, a=a,
                                        vertex_mult=vertex_multiplicity(d, a),
                                        scroll_note=f"directrix line of multiplicity {a}, "
                                                    f"{n} double generators"))
    return found


def plane_curve_linearly_normal(g: int, k: int, canonical_model: bool = False,
                                hyperelliptic: bool = False) -> bool:
    """Whether a smooth-model plane curve of degree ``k`` and genus ``g`` is linearly normal.

    The plane model is cut out by a class ``D`` of degree ``k``; it is linearly
    normal iff ``h0(D) == 3``. A cone over the curve is linearly normal iff the
    curve is.
    """
    curve = CurveContext(g, hyperelliptic)
    D = canonical(curve) if canonical_model else generic(k)
    if D.degree != k:
        raise ValueError("canonical model needs k == 2g - 2")
    return h0_h1(curve, D)[0] == 3
