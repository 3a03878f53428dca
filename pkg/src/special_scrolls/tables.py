"""Published models of linearly normal special scrolls in P^3 of genus 2 and 3.

Rows are transcribed as printed, including two rows whose invariant data is
inconsistent; those carry ``flagged_inconsistent`` and a note instead of a
correction. Divisor expressions use ``K`` (canonical), ``P``/``Q`` (points),
``b`` (the row's divisor), ``e`` (the determinant class) and ``g12`` (the
hyperelliptic pencil).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class MinCurve:
    """``multiplicity * C_degree`` spanning ``P^span``; ``family_dim`` is the ``(oo^n)`` tag."""

    multiplicity: int
    degree: int
    special: bool
    span: int
    family_dim: Optional[int] = None
    image_of: str = ""

    def render(self) -> str:
        mult = "" if self.multiplicity == 1 else str(self.multiplicity)
        star = "*" if self.special else ""
        text = f"{mult}C{self.degree}{star} in P{self.span}"
        if self.image_of:
            text = f"phi({self.image_of})={text}"
        if self.family_dim is not None:
            text += f" (oo^{self.family_dim})"
        return text


@dataclass(frozen=True)
class TableRow:
    g: int
    hyperelliptic: bool
    d: int
    i: int
    E0: str
    decomposable: bool
    e: int
    H_fiber: str
    min_curves: tuple
    conditions: tuple = ()
    e_divisor: Optional[str] = None
    b_degree: Optional[int] = None
    cone: bool = False
    grass_type: Optional[tuple] = None
    flagged_inconsistent: bool = False
    flag_note: str = ""
    table_index: int = 0

    @property
    def H(self) -> str:
        fiber = self.H_fiber if len(self.H_fiber) == 1 else f"({self.H_fiber})"
        return f"|X0+{fiber}f|"

    def symbol_degrees(self, e_degree: Optional[int] = None) -> dict[str, int]:
        degrees = {"K": 2 * self.g - 2, "P": 1, "Q": 1, "g12": 2,
                   "e": -self.e if e_degree is None else e_degree}
        if self.b_degree is not None:
            degrees["b"] = self.b_degree
        return degrees


_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(g12|K|P|Q|b|e|0)")


def divisor_degree(expr: str, degrees: dict[str, int]) -> int:
    """Degree of a linear combination such as ``K-P-e`` or ``2K``."""
    pos, total = 0, 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse divisor expression {expr!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        sym = m.group(3)
        if sym != "0":
            if sym not in degrees:
                raise KeyError(f"no degree known for {sym} in {expr!r}")
            total += sign * coeff * degrees[sym]
        pos = m.end()
    return total


def e_consistent(row: TableRow) -> Optional[bool]:
    """Whether ``e == -deg(e_divisor)``; ``None`` when the row gives no divisor."""
    if row.e_divisor is None:
        return None
    return row.e == -divisor_degree(row.e_divisor, row.symbol_degrees())


def hyperplane_degree(row: TableRow, e_degree: Optional[int] = None) -> int:
    """``H^2 = -e + 2 deg(fiber part)`` with the determinant degree taken from ``e``."""
    return -row.e + 2 * divisor_degree(row.H_fiber, row.symbol_degrees(e_degree))


_L = MinCurve

GENUS2 = (
    TableRow(2, True, 4, 2, "O+O(-b)", True, 4, "b",
             (_L(1, 4, False, 2, 3),),
             conditions=("b !~ 2K", "b ~ K+P+Q"), e_divisor="-b", b_degree=4, cone=True,
             table_index=1),
    TableRow(2, True, 5, 1, "indecomposable", False, 1, "K+P",
             (_L(2, 1, True, 1, image_of="X0"), _L(1, 4, False, 2, 2)),
             e_divisor="-P", flagged_inconsistent=True,
             flag_note="the row gives e=-P (e=1) while the projection analysis derives "
                       "e'=K-P, which has degree 1 and would give e=-1",
             table_index=2),
    TableRow(2, True, 5, 1, "O+O(K-b)", True, 1, "b",
             (_L(2, 1, True, 1, image_of="X0"), _L(3, 1, True, 1, image_of="X1")),
             conditions=("deg b = 3", "b base-point-free"), e_divisor="K-b", b_degree=3,
             table_index=3),
)

GENUS3 = (
    TableRow(3, False, 4, 4, "O+O(-K)", True, 4, "K",
             (_L(1, 4, True, 2, 3),),
             e_divisor="-K", cone=True, grass_type=("alpha-plane", 4, 0), table_index=1),
    TableRow(3, False, 5, 3, "O+O(-b)", True, 5, "b",
             (_L(1, 5, False, 2, 3),),
             conditions=("deg b = 5", "b base-point-free"), e_divisor="-b", b_degree=5,
             cone=True, grass_type=("alpha-plane", 5, 3), table_index=2),
    TableRow(3, False, 6, 2, "O+O(Q-P)", True, 0, "K-P",
             (_L(3, 1, True, 1, image_of="X0"), _L(3, 1, True, 1, image_of="X1")),
             conditions=("P, Q in X", "P != Q"), e_divisor="Q-P",
             grass_type=("quadric", 3, 3, 1), table_index=3),
    TableRow(3, False, 6, 2, "indecomposable", False, 0, "K-P",
             (_L(3, 1, True, 1, image_of="X0"), _L(1, 4, True, 2, 1)),
             e_divisor="0", grass_type=("cone", 3, 1), table_index=4),
    TableRow(3, False, 7, 1, "indecomposable", False, -1, "K-e",
             (_L(1, 4, True, 2, image_of="X0"), _L(1, 5, False, 2, 1)),
             table_index=5),
    TableRow(3, False, 7, 1, "indecomposable", False, -1, "K-e",
             (_L(1, 4, True, 2, image_of="X0"), _L(4, 1, False, 1)),
             table_index=6),
    TableRow(3, False, 7, 1, "O+O(K-b-P)", True, 1, "b",
             (_L(3, 1, True, 1, image_of="X0"), _L(4, 1, False, 1, image_of="X1")),
             conditions=("deg b = 4", "b nonspecial", "b base-point-free", "P in X"),
             e_divisor="K-b-P", b_degree=4, table_index=7),
    TableRow(3, False, 7, 1, "indecomposable", False, 1, "K-P-e",
             (_L(3, 1, True, 1, image_of="X0"), _L(1, 5, False, 2, 1)),
             table_index=8),
)

GENUS3_HYPERELLIPTIC = (
    TableRow(3, True, 5, 3, "O+O(-b)", True, 5, "b",
             (_L(1, 5, False, 2, 3),),
             conditions=("deg b = 5", "b base-point-free"), e_divisor="-b", b_degree=5,
             cone=True, grass_type=("alpha-plane", 5, 3), table_index=1),
    TableRow(3, True, 6, 2, "O+O(g12-b)", True, 2, "b",
             (_L(2, 1, True, 1, image_of="X0"), _L(4, 1, False, 1, image_of="X1")),
             conditions=("deg b = 4", "b base-point-free", "b nonspecial"), e_divisor="g12-b",
             b_degree=4, grass_type=("quadric", 2, 4, 0), table_index=2),
    TableRow(3, True, 6, 2, "indecomposable", False, 2, "g12-e",
             (_L(2, 1, True, 1, image_of="X0"), _L(1, 5, False, 2, 2)),
             e_divisor="0", grass_type=("cone", 2, 0), flagged_inconsistent=True,
             flag_note="the row gives e~0 together with e=2; e=-deg(e) needs deg(e)=-2, "
                       "which is also what makes H^2 equal d=6",
             table_index=3),
    TableRow(3, True, 7, 1, "indecomposable", False, -1, "K-e",
             (_L(2, 2, True, 2, image_of="X0"), _L(1, 5, False, 2, 1)),
             table_index=4),
    TableRow(3, True, 7, 1, "indecomposable", False, -1, "K-e",
             (_L(2, 2, True, 2, image_of="X0"), _L(4, 1, False, 1)),
             table_index=5),
)


def ordered(rows) -> list[TableRow]:
    """Ascending degree, decomposable rows first, printed order otherwise."""
    return sorted(rows, key=lambda r: (r.d, not r.decomposable, r.table_index))
