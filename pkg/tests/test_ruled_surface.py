import warnings

import pytest
from hypothesis import given, strategies as st

from special_scrolls.curve_divisors import CurveContext, DivisorError, canonical, canonical_shift, generic
from special_scrolls.ruled_surface import (
    FIBER,
    SECTION,
    DegenerateWarning,
    FamilyDim,
    NoneGeneric,
    NumClass,
    RuledSurface,
    SurfaceConsistencyError,
    TrackedCurve,
    decomposable_witness,
    family_through_points,
    family_Y_dim,
    intersect,
    make_S_b,
    scroll_R_b,
    unisecant,
)


def S(g, deg, **kw):
    return make_S_b(CurveContext(g), generic(deg), **kw)


def test_genus3_sextic_surface():
    surf = S(3, 6)
    assert surf.e_invariant == 2
    assert intersect(surf, SECTION, SECTION) == -2
    assert intersect(surf, NumClass(1, 2), NumClass(1, 2)) == 2
    assert surf.curve("X1").num_class == NumClass(1, 2)
    assert intersect(surf, FIBER, FIBER) == 0
    assert intersect(surf, SECTION, FIBER) == 1


classes = st.builds(NumClass, st.integers(-6, 6), st.integers(-20, 20))


@given(st.integers(-10, 10), classes, classes, classes)
def test_intersection_form_bilinear_symmetric(e, a, b, c):
    surf = RuledSurface(CurveContext(2), e, generic(-e), None)
    assert surf.intersect(a, b) == surf.intersect(b, a)
    assert surf.intersect(a + b, c) == surf.intersect(a, c) + surf.intersect(b, c)
    assert surf.intersect(a * 3, b) == 3 * surf.intersect(a, b)


def test_R_b_degrees_and_ambient():
    R = scroll_R_b(CurveContext(2), canonical_shift(CurveContext(2), generic(0), delta=2))
    assert (R.degree, R.ambient_dim, R.speciality) == (6, 4, 1)
    R = scroll_R_b(CurveContext(3), generic(6))
    assert (R.degree, R.ambient_dim, R.speciality) == (10, 6, 1)
    for g in range(2, 7):
        for N in range(3, 8):
            R = scroll_R_b(CurveContext(g), generic(2 * g + N - 3))
            assert R.degree == 4 * g + N - 5
            assert R.ambient_dim == 2 * g + N - 3


def test_R_b_degree_sweep():
    for g in range(1, 13):
        for deg in range(max(2 * g - 2, 1), 4 * g + 1):
            R = scroll_R_b(CurveContext(g), generic(deg), c_max=2)
            assert R.degree == 2 * g - 2 + deg
            assert R.rr_holds()


def test_fresh_S_b_self_intersections():
    for g in range(1, 10):
        for deg in range(2 * g - 2, 4 * g):
            surf = S(g, deg, c_max=2)
            x0, x1 = surf.curve("X0").self_int, surf.curve("X1").self_int
            assert x0 == 2 * g - 2 - deg
            assert x0 + x1 == 0


def test_Y_family_self_intersections():
    for g in range(2, 8):
        surf = S(g, 3 * g - 3, c_max=20)
        assert surf.curve("X0").self_int == 1 - g
        for c in range(1, 21):
            Y = surf.curve(f"Y{c}")
            assert Y.self_int == g - 1 + 2 * c == surf.intersect(Y.num_class, Y.num_class)


def test_family_dimensions():
    surf = S(3, 6)
    assert family_Y_dim(surf, 1) == 2
    assert family_Y_dim(surf, 3) == 6
    for g in range(2, 8):
        surf = S(g, 3 * g - 3, c_max=1)
        for c in range(1, 8):
            assert family_Y_dim(surf, c) == 2 * c
            for k in range(0, 2 * c + 1):
                assert family_through_points(c, k) == FamilyDim(family_Y_dim(surf, c) - k)
    with pytest.raises(ValueError):
        family_Y_dim(surf, 0)


def test_family_through_points():
    assert family_through_points(2, 4) == FamilyDim(0)
    assert family_through_points(1, 0) == FamilyDim(2)
    assert isinstance(family_through_points(1, 3), NoneGeneric)


def test_decomposable_witness():
    assert decomposable_witness(S(3, 6)) is True
    curve = CurveContext(3)
    tracked = (TrackedCurve("X0", SECTION, 0), TrackedCurve("X1", NumClass(1, 0), 0))
    surf = RuledSurface(curve, 0, generic(0, nontrivial=True), True, tracked)
    assert decomposable_witness(surf) is True
    lone = RuledSurface(curve, 1, generic(-1), None, (TrackedCurve("X0", SECTION, -1),),
                        untracked_floor=2)
    assert decomposable_witness(lone) is False
    unknown = RuledSurface(curve, 1, generic(-1), None, (TrackedCurve("X0", SECTION, -1),))
    assert decomposable_witness(unknown) is None


def test_consistency_checks():
    with pytest.raises(SurfaceConsistencyError):
        RuledSurface(CurveContext(2), 1, generic(0), None)
    with pytest.raises(SurfaceConsistencyError):
        RuledSurface(CurveContext(2), 1, generic(-1), None, (TrackedCurve("X0", SECTION, 0),))
    with pytest.raises(SurfaceConsistencyError):
        unisecant(1, 2)
    with pytest.raises(DivisorError):
        S(3, 3)


def test_genus2_canonical_b_warns():
    curve = CurveContext(2, hyperelliptic=True)
    with pytest.warns(DegenerateWarning):
        make_S_b(curve, canonical(curve))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        make_S_b(curve, canonical_shift(curve, generic(0), delta=2))


def test_min_curve_report_of_R_b():
    R = scroll_R_b(CurveContext(3), generic(6))
    report = R.min_curve_report()
    first = report[0]
    assert first.label == "X0" and first.degree == 4 and first.is_minimum
    assert first.special and first.span == 2 and first.multiplicity == 1
    hyper = scroll_R_b(CurveContext(3, hyperelliptic=True), generic(6))
    assert hyper.min_curve_report()[0].multiplicity == 2
