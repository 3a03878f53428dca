import pytest
from hypothesis import given, strategies as st

from special_scrolls.curve_divisors import (
    CurveContext,
    DivisorError,
    Kind,
    ScrollNumericsError,
    canonical,
    canonical_shift,
    explicit_special,
    generic,
    h0_h1,
    is_special,
    plus_points,
    scroll_numerics,
    speciality_degree_bound,
    speciality_from,
)


def test_canonical_class():
    assert h0_h1(CurveContext(3), canonical(CurveContext(3))) == (3, 1)


def test_nonspecial_sextic_in_genus_three():
    assert h0_h1(CurveContext(3), generic(6)) == (4, 0)


def test_point_in_genus_two():
    assert h0_h1(CurveContext(2), generic(1)) == (1, 1)


def test_degree_zero_classes():
    curve = CurveContext(3)
    assert h0_h1(curve, generic(0)) == (1, 3)
    assert h0_h1(curve, generic(0, nontrivial=True)) == (0, 2)
    with pytest.raises(DivisorError):
        generic(2, nontrivial=True)


def test_residual_class_uses_serre_duality():
    curve = CurveContext(3)
    # K - P: h0 = h1(P) = 2
    assert h0_h1(curve, canonical_shift(curve, generic(1))) == (2, 1)
    # K - b with b nonspecial of degree 6 has negative degree
    e = canonical_shift(curve, generic(6))
    assert e.degree == -2 and h0_h1(curve, e) == (0, 4)


def test_plus_points():
    curve = CurveContext(3)
    K = canonical(curve)
    assert plus_points(curve, K, 0) is K
    minus = plus_points(curve, K, -1)
    assert minus.degree == 3 and h0_h1(curve, minus)[0] == 2
    plus = plus_points(curve, K, 2)
    assert plus.degree == 6 and h0_h1(curve, plus) == (4, 0)
    assert plus_points(curve, generic(4), -3).degree == 1


def test_explicit_special_validation():
    curve = CurveContext(3, hyperelliptic=True)
    g12 = explicit_special(curve, 2, 2, label="g12")
    assert h0_h1(curve, g12) == (2, 2)
    with pytest.raises(DivisorError):
        explicit_special(curve, 6, 0)
    with pytest.raises(DivisorError):
        plus_points(curve, g12, 1)


def test_curve_context_guards():
    with pytest.raises(DivisorError):
        CurveContext(-1)
    with pytest.raises(DivisorError):
        CurveContext(1, hyperelliptic=True)
    assert CurveContext(5).canonical_degree == 8


@given(st.integers(0, 12), st.integers(-10, 40))
def test_riemann_roch_closure_generic(g, d):
    curve = CurveContext(g)
    a, b = h0_h1(curve, generic(d))
    assert a - b == d - g + 1 and a >= 0 and b >= 0


@given(st.integers(1, 12), st.integers(0, 30), st.integers(-5, 5), st.sampled_from([1, -1]))
def test_riemann_roch_closure_shifts(g, base, delta, sign):
    curve = CurveContext(g)
    div = canonical_shift(curve, generic(base), delta, sign)
    a, b = h0_h1(curve, div)
    assert a - b == div.degree - g + 1


@pytest.mark.parametrize("g,d,i,N", [(2, 5, 1, 3), (3, 4, 4, 3), (0, 1, 0, 2)])
def test_scroll_numerics(g, d, i, N):
    assert scroll_numerics(g, d, i) == N
    if N >= 3:
        assert speciality_from(g, d, N) == i


def test_speciality_from_errors():
    with pytest.raises(ScrollNumericsError):
        speciality_from(3, 4, 2)
    with pytest.raises(ScrollNumericsError):
        speciality_from(3, 9, 3)
    with pytest.raises(ScrollNumericsError):
        scroll_numerics(2, 0, 1)


@pytest.mark.parametrize("g,N,bound", [(3, 3, 7), (2, 3, 5), (1, 3, 3)])
def test_speciality_degree_bound(g, N, bound):
    assert speciality_degree_bound(g, N) == bound


def test_special_implies_degree_bound_sweep():
    for g in range(0, 10):
        for d in range(1, 60):
            for i in range(1, 12):
                N = scroll_numerics(g, d, i)
                assert d <= speciality_degree_bound(g, N)


def test_canonical_is_only_class_with_g_and_1():
    for g in range(2, 10):
        curve = CurveContext(g)
        hits = [d for d in range(-2, 4 * g) if h0_h1(curve, generic(d)) == (g, 1)]
        assert hits == []
        assert h0_h1(curve, canonical(curve)) == (g, 1)
        assert is_special(curve, canonical(curve))
        assert canonical(curve).kind is Kind.CANONICAL
