"""Invariant sweeps behind ``special-scrolls verify``.

Each suite returns a list of :class:`Check` results; a failing check carries
the first counterexample it met.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional

from . import classifier, grassmannian, tables
from .curve_divisors import CurveContext, generic, scroll_numerics, speciality_degree_bound
from .elem_transform import (
    PointSpec,
    explicit_Rb_points,
    generic_transform_report,
    project_scroll,
    rb_identities,
    reduce_to_Rb,
    transform,
)
from .ruled_surface import make_S_b, scroll_R_b


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None


class _Sweep:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.bad: Optional[str] = None

    def expect(self, ok: bool, detail: Callable[[], str]) -> None:
        self.cases += 1
        if not ok and self.bad is None:
            self.bad = detail()

    def result(self) -> Check:
        return Check(self.name, self.bad is None, self.cases, self.bad)


def all_rows() -> list:
    return (classifier.classify_p3(2, True) + classifier.classify_p3(3, False)
            + classifier.classify_p3(3, True))


def rr_closure(g_max: int = 12, n_max: int = 60) -> list[Check]:
    rows = _Sweep("table rows satisfy d-2g+1+i == 3")
    for r in all_rows():
        rows.expect(r.d - 2 * r.g + 1 + r.i == 3, lambda r=r: f"row {r}")

    grid = _Sweep("scroll_numerics is Riemann-Roch for 2<=g<=3 in P^3")
    for g in (2, 3):
        for d in range(1, 4 * g + 2):
            i = 3 - d + 2 * g - 1
            if i >= 0:
                grid.expect(scroll_numerics(g, d, i) == 3, lambda g=g, d=d, i=i: f"g={g} d={d} i={i}")

    gen = _Sweep("classify_generic: d == N+2g-2, speciality 1, RR")
    for g in range(2, g_max + 1):
        for N in range(3, n_max + 1):
            m = classifier.classify_generic(g, N)
            ok = (m.d == N + 2 * g - 2 and m.speciality == 1
                  and scroll_numerics(g, m.d, m.speciality) == N
                  and m.d <= speciality_degree_bound(g, N))
            gen.expect(ok, lambda m=m: f"{m}")

    rb = _Sweep("R_b models close Riemann-Roch")
    for g in range(2, min(g_max, 8) + 1):
        for deg in range(2 * g - 1, 4 * g):
            model = scroll_R_b(CurveContext(g), generic(deg))
            rb.expect(model.rr_holds(), lambda g=g, deg=deg: f"R_b g={g} deg b={deg}")
    return [rows.result(), grid.result(), gen.result(), rb.result()]


def generica_boundaries(g_max: int = 20, n_max: int = 60) -> list[Check]:
    forms = _Sweep("N-form and d-form case boundaries agree")
    parity = _Sweep("case 3 invariant e follows the parity of N against g")
    low = _Sweep("minimum self-intersection matches the generic transform report")
    normal = _Sweep("special curve linearly normal iff N >= g-1")
    for g in range(2, g_max + 1):
        for N in range(3, n_max + 1):
            d = N + 2 * g - 2
            m = classifier.classify_generic(g, N)
            by_n = 1 if N >= 3 * g - 3 else 2 if g - 1 <= N else 3
            by_d = 1 if d >= 5 * g - 5 else 2 if 3 * g - 3 <= d else 3
            forms.expect(m.case_id == by_n == by_d,
                         lambda: f"g={g} N={N}: case {m.case_id}, N-form {by_n}, d-form {by_d}")
            if m.case_id == 3:
                expected = -(g - 1) if N % 2 == (g - 1) % 2 else -g
                parity.expect(m.e == expected, lambda: f"g={g} N={N}: e={m.e}, expected {expected}")
            if N < 3 * g - 3:
                rep = generic_transform_report(g, 3 * g - 3 - N)
                value = classifier.min_curve_self_int_generic(g, N)
                low.expect(value == rep.minimum,
                           lambda: f"g={g} N={N}: formula {value}, report {rep.minimum}")
            normal.expect(m.special_curve.linearly_normal == (N >= g - 1),
                          lambda: f"g={g} N={N}")
    return [forms.result(), parity.result(), low.result(), normal.result()]


ORACLE_LABELS = ("X0", "X1", "Y1", "Y2", "Y3", "Y4")


def transform_oracle(g_max: int = 6, k_max: int = 10) -> list[Check]:
    """Compare :func:`transform` with direct ``C^2 - l + (k - l)`` counting.

    Points are placed on one named curve each (or on none) and are not
    generic, so no moving family picks up extra points.
    """
    counts = _Sweep("transformed self-intersections equal C^2 - l + (k - l)")
    minimum = _Sweep("minimum after k generic points equals the generic report")
    for g in range(2, g_max + 1):
        S = make_S_b(CurveContext(g), generic(3 * g - 3), c_max=4)
        before = {c.label: c.self_int for c in S.tracked_curves}
        for k in range(k_max + 1):
            for combo in itertools.combinations_with_replacement(ORACLE_LABELS + ("",), k):
                pts = [PointSpec(f"p{n}", frozenset({lab} if lab else ()), generic=False)
                       for n, lab in enumerate(combo)]
                after = {c.label: c.self_int for c in transform(S, pts).tracked_curves}
                expected = {lab: s - combo.count(lab) + (k - combo.count(lab))
                            for lab, s in before.items()}
                counts.expect(after == expected,
                              lambda: f"g={g} points={combo}: got {after}, expected {expected}")
            S_full = make_S_b(CurveContext(g), generic(3 * g - 3))
            got = transform(S_full, [PointSpec(f"p{n}") for n in range(k)]).min_self_int()
            want = generic_transform_report(g, k).minimum
            minimum.expect(got == want, lambda: f"g={g} k={k}: transform {got}, report {want}")
    return [counts.result(), minimum.result()]


def _pair(model) -> tuple:
    return model.surface.decomposable, model.surface.e_invariant


def projection_crosscheck() -> list[Check]:
    d7 = _Sweep("genus-3 degree-7 analysis equals the transform engine")
    rows = _Sweep("genus-3 degree-7 outcomes are exactly the table's (decomposable, e) pairs")
    for hyper in (False, True):
        seen = set()
        for pts in itertools.product(("X0", "X1", "generic"), repeat=3):
            try:
                out = classifier.genus3_d7_projection(pts, hyper)
            except classifier.ClassificationError:
                continue
            if isinstance(out, classifier.Rejected):
                continue
            engine = classifier.engine_d7_projection(pts, hyper)
            d7.expect(_pair(out) == _pair(engine)
                      and out.surface.curve("X0").self_int == engine.surface.curve("X0").self_int,
                      lambda: f"{pts} hyperelliptic={hyper}: {_pair(out)} vs {_pair(engine)}")
            seen.add(_pair(out))
        table = {(r.decomposable, r.e) for r in classifier.classify_p3(3, hyper) if r.d == 7}
        rows.expect(seen == table, lambda: f"hyperelliptic={hyper}: {seen} vs {table}")

    g2 = _Sweep("genus-2 projections reproduce the table and the degenerate cases")
    outcomes = {p: classifier.genus2_projection(p) for p in classifier.GENUS2_POINTS}
    models = {p: o for p, o in outcomes.items() if not isinstance(o, classifier.Degenerate)}
    got = {(m.degree, m.speciality, m.surface.e_invariant, m.surface.decomposable)
           for m in models.values()}
    want = {(r.d, r.i, r.e, r.decomposable) for r in classifier.classify_p3(2, True)}
    g2.expect(got == want, lambda: f"{got} vs {want}")
    degenerate = [p for p, o in outcomes.items() if isinstance(o, classifier.Degenerate)]
    degenerate.append("b~K" if isinstance(classifier.genus2_projection("generic", b_canonical=True),
                                         classifier.Degenerate) else "")
    g2.expect(degenerate == ["singular:X1", "b~K"], lambda: f"degenerate cases {degenerate}")
    for p in ("X1", "generic", "fiber:A1", "fiber:A2"):
        engine = classifier.engine_genus2_projection(p)
        g2.expect(_pair(engine) == _pair(models[p]), lambda p=p: f"{p}: engine {_pair(engine)}")
    return [d7.result(), rows.result(), g2.result()]


def _exhaustive_candidates(g: int, d: int) -> set:
    found = set()
    if (d - 1) * (d - 2) // 2 - g >= 0:
        found.add(("alpha-plane", d, (d - 1) * (d - 2) // 2 - g))
    for a1 in range(1, d):
        for n in range(0, d * d):
            if a1 <= d - a1 and (a1 - 1) * (d - a1 - 1) - n == g:
                found.add(("quadric", a1, d - a1, n))
    for a in range(2, d):
        for n in range(0, d * d):
            if 2 * a <= d and (a - 1) * (d - a - 1) - n == g:
                found.add(("cone", a, n))
    return found


def grassmannian_enumeration(g_max: int = 6, d_max: int = 10) -> list[Check]:
    ids = _Sweep("genus formulas on the genus-3 sextic cases")
    ids.expect(grassmannian.quadric_genus(2, 4, 0) == 3, lambda: "quadric (2,4,0)")
    ids.expect(grassmannian.quadric_genus(3, 3, 1) == 3, lambda: "quadric (3,3,1)")
    ids.expect(grassmannian.cone_genus(6, 3, 1) == 3, lambda: "cone (6,3,1)")
    ids.expect(grassmannian.cone_genus(6, 2, 0) == 3, lambda: "cone (6,2,0)")
    ids.expect(grassmannian.vertex_multiplicity(6, 2) == 2, lambda: "vertex (6,2)")
    ids.expect(grassmannian.vertex_multiplicity(6, 3) == 0, lambda: "vertex (6,3)")

    enum = _Sweep("enumerate_candidates equals exhaustive search")
    for g in range(1, g_max + 1):
        for d in range(3, d_max + 1):
            got = {c.key() for c in grassmannian.enumerate_candidates(g, d)}
            want = _exhaustive_candidates(g, d)
            enum.expect(got == want, lambda: f"g={g} d={d}: {sorted(got)} vs {sorted(want)}")
    return [ids.result(), enum.result()]


def stability_bound(g_max: int = 20, d_max: int = 100) -> list[Check]:
    s = _Sweep("stability_possible(g, d) == (d < 4g-4)")
    for g in range(2, g_max + 1):
        for d in range(1, d_max + 1):
            s.expect(classifier.stability_possible(g, d) == (d < 4 * g - 4), lambda: f"g={g} d={d}")
    return [s.result()]


def reduction_identities() -> list[Check]:
    red = _Sweep("reduce_to_Rb gives (4, 6-d, 0) in genus 2 and (6, 10-d, 2) in genus 3")
    for g, d_range, form in ((2, range(4, 6), lambda d: (4, 6 - d, 0)),
                             (3, range(4, 8), lambda d: (6, 10 - d, 2))):
        for d in d_range:
            red.expect(reduce_to_Rb(g, 3, d) == form(d), lambda g=g, d=d: f"g={g} d={d}")

    ident = _Sweep("explicit_Rb_points yields Xa'.Xb' = 0 with planes (K, b)")
    for g in range(2, 6):
        for N in range(3, 7):
            for d in range(2 * g + 1, 2 * g + N - 1):
                deg_b, k, span = reduce_to_Rb(g, N, d)
                if k < span + 1:
                    continue
                R_b = scroll_R_b(CurveContext(g), generic(deg_b))
                R = project_scroll(R_b, [PointSpec(f"p{n}") for n in range(k)], span_dim=span)
                xa = R.surface.curve("X0")
                for c in R.surface.tracked_curves:
                    if (c is xa or c.plane_divisor is None or c.plane_divisor.degree > deg_b
                            or R.surface.intersect(xa.num_class, c.num_class) < 0):
                        continue
                    res = rb_identities(R, "X0", c.label, explicit_Rb_points(R, "X0", c.label))
                    ident.expect(res.ok, lambda g=g, N=N, d=d, c=c, res=res:
                                 f"g={g} N={N} d={d} X_b={c.label}: {res}")
    return [red.result(), ident.result()]


SUITES = {
    "rr-closure": rr_closure,
    "generica-boundaries": generica_boundaries,
    "transform-oracle": transform_oracle,
    "projection-crosscheck": projection_crosscheck,
    "grassmannian-enumeration": grassmannian_enumeration,
    "stability-bound": stability_bound,
    "reduction-identities": reduction_identities,
}


def flagged_table_rows() -> list:
    return [r for r in all_rows() if r.flagged_inconsistent]


def e_check_rows() -> list:
    """Rows whose determinant divisor has a computable degree contradicting ``e``."""
    return [r for r in all_rows() if tables.e_consistent(r) is False]
