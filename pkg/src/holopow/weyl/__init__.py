"""Differential operators, the Weyl algebra, Fourier map and indicial analysis."""
from .operators import (
    DiffOperator,
    WeylElement,
    canonicalize_polys,
    fourier,
    inverse_fourier,
    residual_eval,
    weyl_mul,
)
from .serialize import (
    operator_from_dict,
    operator_from_json,
    operator_from_text,
    operator_to_dict,
    operator_to_json,
    operator_to_text,
)
from .theta import (
    INFINITY,
    FourierHypothesisError,
    IndicialResult,
    ThetaForm,
    exponent_check,
    fourier_exponents,
    indicial,
    polynomial_roots,
    to_theta_form,
)

__all__ = [
    "DiffOperator", "WeylElement", "ThetaForm", "IndicialResult", "INFINITY",
    "weyl_mul", "fourier", "inverse_fourier", "canonicalize_polys", "residual_eval",
    "to_theta_form", "indicial", "exponent_check", "fourier_exponents",
    "FourierHypothesisError", "polynomial_roots",
    "operator_to_json", "operator_from_json", "operator_to_dict", "operator_from_dict",
    "operator_to_text", "operator_from_text",
]
