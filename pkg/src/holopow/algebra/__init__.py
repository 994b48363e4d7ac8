"""Exact arithmetic: Gaussian rationals, polynomials, rational functions."""
from .linsolve import SingularMatrixError, mat_vec, solve_exact
from .poly import (
    NEG_INF,
    ONE_POLY,
    POS_INF,
    RF_ONE,
    RF_ZERO,
    X_POLY,
    ZERO_POLY,
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    binomial,
    clear_denominators,
    common_denominator,
    falling_factorial_poly,
    laurent_bounds,
    poly_gcd,
    poly_lcm,
    squarefree_decomposition,
)
from .scalars import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    Rational,
    format_scalar,
    gaussian_int_gcd,
    gq,
    unit_normalizer,
)
from .text import (
    ParseError,
    format_polynomial,
    format_rational_function,
    format_terms,
    parse_laurent,
    parse_polynomial,
    parse_rational_function,
    parse_scalar,
    scalar_from_json,
    scalar_to_json,
)

__all__ = [
    "GaussianRational", "Rational", "I", "ONE", "ZERO", "gq", "format_scalar",
    "gaussian_int_gcd", "unit_normalizer",
    "Polynomial", "LaurentPolynomial", "RationalFunction",
    "NEG_INF", "POS_INF", "ZERO_POLY", "ONE_POLY", "X_POLY", "RF_ZERO", "RF_ONE",
    "poly_gcd", "poly_lcm", "laurent_bounds", "squarefree_decomposition",
    "falling_factorial_poly", "binomial", "clear_denominators", "common_denominator",
    "solve_exact", "mat_vec", "SingularMatrixError",
    "ParseError", "format_terms", "format_polynomial", "format_rational_function",
    "parse_rational_function", "parse_polynomial", "parse_laurent", "parse_scalar",
    "scalar_to_json", "scalar_from_json",
]
