import itertools

import pytest

from special_scrolls import classifier as cl
from special_scrolls.tables import divisor_degree, e_consistent, hyperplane_degree


@pytest.mark.parametrize("g,N,case,decomposable,e,d", [
    (3, 6, 1, True, 2, 10),
    (3, 3, 2, False, -1, 7),
    (5, 3, 3, False, -5, 11),
])
def test_classify_generic_examples(g, N, case, decomposable, e, d):
    m = cl.classify_generic(g, N)
    assert (m.case_id, m.decomposable, m.e, m.d, m.speciality) == (case, decomposable, e, d, 1)


def test_case_one_details():
    m = cl.classify_generic(3, 6)
    assert m.linear_system == "|X0+bf|"
    assert m.special_curve.source == "X0" and m.special_curve.linearly_normal
    assert m.special_curve.degree == 4


def test_case_three_records_stated_self_intersection():
    m = cl.classify_generic(7, 4)
    assert m.case_id == 3
    assert m.special_curve.source == "Y"
    assert m.special_curve.self_int == 2 * 7 - 2 + 4
    assert not m.special_curve.linearly_normal
    assert m.notes


def test_classify_generic_errors():
    with pytest.raises(cl.ClassificationError):
        cl.classify_generic(3, 2)
    with pytest.raises(cl.ClassificationError):
        cl.classify_generic(1, 5)


def test_boundaries_in_both_forms():
    for g in range(2, 21):
        for N in range(3, 61):
            d = N + 2 * g - 2
            assert cl.case_of(g, N) == cl.case_of_degree(g, d)
            m = cl.classify_generic(g, N)
            assert m.special_curve.linearly_normal == (N >= g - 1)
            assert (m.case_id == 3) == (N < g - 1)


@pytest.mark.parametrize("g,N,value", [(3, 3, 1), (3, 4, 0), (6, 4, 6), (6, 3, 5)])
def test_min_curve_self_int_generic(g, N, value):
    assert cl.min_curve_self_int_generic(g, N) == value


def test_table_sizes_and_order():
    g2 = cl.classify_p3(2, True)
    g3 = cl.classify_p3(3, False)
    g3h = cl.classify_p3(3, True)
    assert len(g2) == 3 and len(g3h) == 5
    assert len(g3) == 8
    for rows in (g2, g3, g3h):
        keys = [(r.d, not r.decomposable) for r in rows]
        assert keys == sorted(keys)
        for r in rows:
            assert r.d - 2 * r.g + 1 + r.i == 3
    with pytest.raises(cl.ClassificationError):
        cl.classify_p3(2, False)
    with pytest.raises(cl.ClassificationError):
        cl.classify_p3(4, False)


def test_genus2_cone_row():
    row = cl.classify_p3(2, True)[0]
    assert (row.d, row.i, row.e, row.cone) == (4, 2, 4, True)
    assert row.E0 == "O+O(-b)"
    assert "b ~ K+P+Q" in row.conditions and "b !~ 2K" in row.conditions
    (mc,) = row.min_curves
    assert (mc.degree, mc.span, mc.family_dim, mc.special) == (4, 2, 3, False)


def test_genus3_quadric_row():
    row = [r for r in cl.classify_p3(3, False) if r.d == 6 and r.decomposable][0]
    assert row.E0 == "O+O(Q-P)" and row.e == 0 and row.H == "|X0+(K-P)f|"
    assert [(m.multiplicity, m.degree, m.special) for m in row.min_curves] == [(3, 1, True)] * 2


def test_hyperelliptic_double_conic():
    for row in [r for r in cl.classify_p3(3, True) if r.d == 7]:
        assert row.e == -1 and not row.decomposable
        assert row.min_curves[0].render() == "phi(X0)=2C2* in P2"


def test_e_consistency_and_hyperplane_degree():
    rows = cl.classify_p3(2, True) + cl.classify_p3(3, False) + cl.classify_p3(3, True)
    bad = [r for r in rows if e_consistent(r) is False]
    assert [(r.g, r.hyperelliptic, r.d, r.decomposable) for r in bad] == [(3, True, 6, False)]
    assert all(r.flagged_inconsistent for r in bad)
    assert sorted((r.g, r.d) for r in cl.flagged_rows(rows)) == [(2, 5), (3, 6)]
    for r in rows:
        assert hyperplane_degree(r) == r.d
    flagged = bad[0]
    assert hyperplane_degree(flagged, e_degree=0) != flagged.d


def test_divisor_degree_parser():
    deg = {"K": 4, "P": 1, "Q": 1, "b": 6, "e": -2, "g12": 2}
    assert divisor_degree("K-P-e", deg) == 5
    assert divisor_degree("-b", deg) == -6
    assert divisor_degree("2K+P", deg) == 9
    assert divisor_degree("0", deg) == 0
    with pytest.raises(ValueError):
        divisor_degree("K*P", deg)


def test_stability():
    assert cl.stability_possible(3, 8) is False
    assert cl.stability_possible(3, 7) is True
    assert cl.stability_possible(10, 35) is True
    with pytest.raises(cl.ClassificationError):
        cl.stability_possible(1, 3)


def test_genus2_projection_cases():
    cone = cl.genus2_projection("X0")
    assert (cone.degree, cone.speciality, cone.surface.e_invariant, cone.ambient_dim) == (4, 2, 4, 3)
    dec = cl.genus2_projection("generic")
    assert (dec.degree, dec.surface.e_invariant, dec.surface.decomposable) == (5, 1, True)
    ind = cl.genus2_projection("fiber:A2")
    assert (ind.degree, ind.surface.e_invariant, ind.surface.decomposable) == (5, 1, False)
    assert isinstance(cl.genus2_projection("singular:X1"), cl.Degenerate)
    assert isinstance(cl.genus2_projection("generic", b_canonical=True), cl.Degenerate)
    with pytest.raises(cl.ClassificationError):
        cl.genus2_projection("Y1")


def test_genus2_engine_agreement():
    for p in ("X1", "generic", "fiber:A1", "fiber:A2"):
        rule = cl.genus2_projection(p)
        engine = cl.engine_genus2_projection(p)
        assert (rule.degree, rule.surface.e_invariant, rule.surface.decomposable) == \
               (engine.degree, engine.surface.e_invariant, engine.surface.decomposable)


def test_genus3_d7_examples():
    out = cl.genus3_d7_projection(["X0", "X1", "X1"])
    assert out.surface.decomposable and out.surface.e_invariant == 1
    assert out.surface.curve("X0").self_int == -1 and out.surface.curve("X1").self_int == 1
    assert isinstance(cl.genus3_d7_projection(["X0", "X0", "generic"]), cl.Rejected)
    assert isinstance(cl.genus3_d7_projection(["X1", "X1", "X1"]), cl.Rejected)
    with pytest.raises(cl.ClassificationError):
        cl.genus3_d7_projection(["X0", "generic", "generic"], hyperelliptic=True)
    with pytest.raises(cl.ClassificationError):
        cl.genus3_d7_projection(["X0", "generic"])


def test_genus3_d7_engine_equivalence():
    for hyper in (False, True):
        seen = set()
        for pts in itertools.product(["X0", "X1", "generic"], repeat=3):
            try:
                rule = cl.genus3_d7_projection(pts, hyper)
            except cl.ClassificationError:
                with pytest.raises(ValueError):
                    cl.engine_d7_projection(pts, hyper)
                continue
            if isinstance(rule, cl.Rejected):
                continue
            engine = cl.engine_d7_projection(pts, hyper)
            for attr in ("e_invariant", "decomposable"):
                assert getattr(rule.surface, attr) == getattr(engine.surface, attr)
            for c in rule.surface.tracked_curves:
                assert c.self_int == engine.surface.curve(c.label).self_int
            assert rule.min_curve_report()[0].degree == engine.min_curve_report()[0].degree
            seen.add((rule.surface.decomposable, rule.surface.e_invariant))
        table = {(r.decomposable, r.e) for r in cl.classify_p3(3, hyper) if r.d == 7}
        assert seen == table


def test_generic_model_lands_in_table():
    m = cl.classify_generic(3, 3)
    rows = [r for r in cl.classify_p3(3, False) + cl.classify_p3(3, True) if r.d == 7]
    assert any(not r.decomposable and r.e == m.e == -1 for r in rows)
    assert cl.min_curve_self_int_generic(3, 3) == 1


def test_matching_rows():
    rows = cl.classify_p3(3, False)
    hits = cl.matching_rows(cl.genus3_d7_projection(["X0", "X1", "generic"]), rows)
    assert [r.table_index for r in hits] == [8]
