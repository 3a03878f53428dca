"""Serialization of classification results.

The structured format is canonical JSON (sorted keys, fixed separators), so
the same query always produces the same bytes and a parsed report
re-serializes identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .classifier import Degenerate, GenericScrollModel, Rejected
from .elem_transform import MinCurveReport
from .ruled_surface import ScrollModel
from .tables import TableRow

SCHEMA_VERSION = 1


def _rr(ok: bool) -> str:
    return "pass" if ok else "fail"


def scroll_to_dict(model: ScrollModel) -> dict:
    s = model.surface
    g = s.genus
    curves = []
    for c in model.min_curve_report():
        image = c.degree // c.multiplicity if c.multiplicity else c.degree
        curves.append({"label": c.label, "degree": c.degree, "image_degree": image,
                       "self_int": c.self_int,
                       "family_dim": c.family_dim, "special": c.special, "span": c.span,
                       "multiplicity": c.multiplicity, "is_minimum": c.is_minimum})
    return {
        "kind": "scroll",
        "g": g,
        "hyperelliptic": s.base.hyperelliptic,
        "d": model.degree,
        "i": model.speciality,
        "N": model.ambient_dim,
        "e": s.e_invariant,
        "e_divisor": s.e_divisor.describe(),
        "decomposable": s.decomposable,
        "H": str(model.H),
        "curves": curves,
        "notes": list(model.notes),
        "rr_check": _rr(model.rr_holds()),
    }


def row_to_dict(row: TableRow) -> dict:
    return {
        "kind": "table_row",
        "g": row.g,
        "hyperelliptic": row.hyperelliptic,
        "d": row.d,
        "i": row.i,
        "E0": row.E0,
        "conditions": list(row.conditions),
        "e": row.e,
        "e_divisor": row.e_divisor,
        "decomposable": row.decomposable,
        "H": row.H,
        "cone": row.cone,
        "min_curves": [
            {"multiplicity": m.multiplicity, "degree": m.degree, "special": m.special,
             "span": m.span, "family_dim": m.family_dim, "image_of": m.image_of,
             "text": m.render()}
            for m in row.min_curves],
        "flagged_inconsistent": row.flagged_inconsistent,
        "flag_note": row.flag_note,
        "rr_check": _rr(row.d - 2 * row.g + 1 + row.i == 3),
    }


def generic_to_dict(m: GenericScrollModel) -> dict:
    sc = m.special_curve
    return {
        "kind": "generic_model",
        "g": m.g,
        "N": m.N,
        "d": m.d,
        "i": m.speciality,
        "case_id": m.case_id,
        "decomposable": m.decomposable,
        "e": m.e,
        "e_divisor": m.e_desc,
        "E0": m.E0_desc,
        "linear_system": m.linear_system,
        "special_curve": {"source": sc.source, "is_min_degree": sc.is_min_degree,
                          "linearly_normal": sc.linearly_normal, "degree": sc.degree,
                          "self_int": sc.self_int},
        "min_self_int": m.min_self_int,
        "notes": list(m.notes),
        "rr_check": _rr(m.d - 2 * m.g + 1 + m.speciality == m.N),
    }


def min_report_to_dict(r: MinCurveReport) -> dict:
    return {
        "kind": "min_curve_report",
        "g": r.g,
        "k": r.k,
        "j": r.j,
        "cases": [{"label": c.label, "self_int": c.self_int, "family_dim": c.family_dim,
                   "is_minimum": c.is_minimum} for c in r.cases],
        "decomposable_after": r.decomposable_after,
        "rr_check": "n/a",
    }


def outcome_to_dict(obj: Any) -> dict:
    if isinstance(obj, ScrollModel):
        return scroll_to_dict(obj)
    if isinstance(obj, TableRow):
        return row_to_dict(obj)
    if isinstance(obj, GenericScrollModel):
        return generic_to_dict(obj)
    if isinstance(obj, MinCurveReport):
        return min_report_to_dict(obj)
    if isinstance(obj, Degenerate):
        return {"kind": "degenerate", "reason": obj.reason, "rr_check": "n/a"}
    if isinstance(obj, Rejected):
        return {"kind": "rejected", "reason": obj.reason, "rr_check": "n/a"}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    query_echo: dict
    results: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    provenance: list = field(default_factory=list)

    def add(self, obj: Any, source: str) -> None:
        item = obj if isinstance(obj, dict) else outcome_to_dict(obj)
        self.results.append(item)
        self.provenance.append(source)
        if item.get("flagged_inconsistent"):
            self.warnings.append(f"row d={item['d']} ({item['E0']}): {item['flag_note']}")
        if item["kind"] == "degenerate":
            self.warnings.append(f"degenerate: {item['reason']}")

    def to_dict(self) -> dict:
        return {"schema_version": SCHEMA_VERSION, "query_echo": self.query_echo,
                "results": self.results, "warnings": self.warnings,
                "provenance": self.provenance}

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {data.get('schema_version')}")
        return cls(data["query_echo"], data["results"], data["warnings"], data["provenance"])

    def to_text(self) -> str:
        lines = [f"query: {' '.join(f'{k}={v}' for k, v in sorted(self.query_echo.items()))}"]
        for n, (item, src) in enumerate(zip(self.results, self.provenance), 1):
            lines.append(f"[{n}] {_summary(item)}  (rr {item['rr_check']}; {src})")
            lines.extend(f"      {extra}" for extra in _details(item))
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _summary(item: dict) -> str:
    kind = item["kind"]
    if kind == "table_row":
        flag = " [flagged]" if item["flagged_inconsistent"] else ""
        cone = " (cone)" if item["cone"] else ""
        cond = f" [{'; '.join(item['conditions'])}]" if item["conditions"] else ""
        return (f"d={item['d']} i={item['i']} E0={item['E0']}{cond} e={item['e']} "
                f"H={item['H']}{cone}{flag}")
    if kind == "generic_model":
        return (f"case {item['case_id']}: g={item['g']} N={item['N']} d={item['d']} i=1 "
                f"e={item['e']} {'decomposable' if item['decomposable'] else 'indecomposable'} "
                f"{item['linear_system']}")
    if kind == "scroll":
        split = {True: "decomposable", False: "indecomposable", None: "splitting unknown"}
        return (f"scroll g={item['g']} d={item['d']} i={item['i']} in P{item['N']} "
                f"e={item['e']} {split[item['decomposable']]}")
    if kind == "min_curve_report":
        return f"g={item['g']} k={item['k']} j={item['j']}"
    if kind == "check":
        status = "PASS" if item["passed"] else "FAIL"
        return f"{status} {item['name']} ({item['cases']} cases)"
    return f"{kind}: {item['reason']}"


def _details(item: dict) -> list[str]:
    kind = item["kind"]
    if kind == "table_row":
        return [m["text"] for m in item["min_curves"]]
    if kind == "generic_model":
        sc = item["special_curve"]
        out = [f"special curve: image of {sc['source']}, degree {sc['degree']}, "
               f"self-intersection {sc['self_int']}, "
               f"{'' if sc['linearly_normal'] else 'not '}linearly normal"]
        return out + item["notes"]
    if kind == "scroll":
        out = []
        for c in item["curves"]:
            star = "*" if c["special"] else ""
            mult = c["multiplicity"] if c["multiplicity"] not in (None, 1) else ""
            span = f" in P{c['span']}" if c["span"] is not None else ""
            fam = f" (oo^{c['family_dim']})" if c["family_dim"] else ""
            low = " minimum" if c["is_minimum"] else ""
            shape = "vertex" if c["degree"] == 0 else f"{mult}C{c['image_degree']}{star}{span}"
            out.append(f"{c['label']}: {shape}{fam}, "
                       f"self-intersection {c['self_int']}{low}")
        return out + item["notes"]
    if kind == "min_curve_report":
        return [f"{c['label']}: {c['self_int']} (family dim {c['family_dim']})"
                for c in item["cases"]]
    if kind == "check" and item["counterexample"]:
        return [f"counterexample: {item['counterexample']}"]
    return []
