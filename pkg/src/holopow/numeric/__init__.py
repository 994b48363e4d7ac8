"""Floating-point layer: characteristic-function evaluation, inversion,
ODE integration and Monte Carlo checks."""
from .export import density_from_json, density_to_csv, density_to_json
from .inversion import (
    InitialValueJob,
    J_values,
    cosine_integral_full,
    initial_values,
    phi_power_coefficients,
    phi_power_derivative,
    sici,
    sine_integral_full,
)
from .ivp import IVPSolution, IVPStats, ivp_solve, leading_zeros
from .montecarlo import MonteCarloEstimate, monte_carlo_density, silverman_bandwidth
from .phi import (
    AIRY_T_MIN,
    PhiEvaluator,
    airy_ai,
    airy_phi,
    airy_series,
    multifactorial,
    phi_asymptotic,
    phi_quadrature,
    phi_residual,
    phi_series_terms,
    phi_values,
)

__all__ = [
    "multifactorial", "phi_asymptotic", "phi_quadrature", "airy_phi", "airy_ai", "airy_series",
    "PhiEvaluator", "phi_values", "phi_residual", "phi_series_terms", "AIRY_T_MIN",
    "J_values", "sici", "sine_integral_full", "cosine_integral_full",
    "InitialValueJob", "initial_values", "phi_power_coefficients", "phi_power_derivative",
    "ivp_solve", "IVPSolution", "IVPStats", "leading_zeros",
    "monte_carlo_density", "MonteCarloEstimate", "silverman_bandwidth",
    "density_to_csv", "density_to_json", "density_from_json",
]
