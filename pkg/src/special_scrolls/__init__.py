"""Numerical classification of special scrolls and the ruled surfaces behind them."""

from .classifier import (
    ClassificationError,
    Degenerate,
    GenericScrollModel,
    Rejected,
    classify_generic,
    classify_p3,
    genus2_projection,
    genus3_d7_projection,
    min_curve_self_int_generic,
    stability_possible,
)
from .curve_divisors import CurveContext, DivisorClass, h0_h1, scroll_numerics
from .elem_transform import PointSpec, generic_transform_report, project_scroll, transform
from .ruled_surface import RuledSurface, ScrollModel, make_S_b, scroll_R_b

__all__ = [
    "ClassificationError", "CurveContext", "Degenerate", "DivisorClass", "GenericScrollModel",
    "PointSpec", "Rejected", "RuledSurface", "ScrollModel", "classify_generic", "classify_p3",
    "generic_transform_report", "genus2_projection", "genus3_d7_projection", "h0_h1",
    "make_S_b", "min_curve_self_int_generic", "project_scroll", "scroll_R_b",
    "scroll_numerics", "stability_possible", "transform",
]
