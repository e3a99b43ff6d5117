"""Sturmian substitutions, derived words and closeability under derivation."""

from ._core import (
    SturmianError,
    apply,
    classify,
    closed_set,
    delta,
    delta_orbit,
    derived_word,
    fixed_point_params,
    fixed_point_prefix,
    generate,
    is_closeable,
    is_normalized,
    morphisms_equal,
    normalize,
    realize,
    verify_closed,
    yasutomi_gamma,
    yasutomi_theta,
)

__all__ = [
    "SturmianError",
    "apply",
    "classify",
    "closed_set",
    "delta",
    "delta_orbit",
    "derived_word",
    "fixed_point_params",
    "fixed_point_prefix",
    "generate",
    "is_closeable",
    "is_normalized",
    "morphisms_equal",
    "normalize",
    "realize",
    "verify_closed",
    "yasutomi_gamma",
    "yasutomi_theta",
]
