"""High-order cubature for the free Schroedinger equation in many dimensions."""

from ._schro import (
    ConfigError,
    DomainError,
    Error,
    OrderTooLarge,
    ToleranceNotReached,
    box_factor,
    chi,
    convergence_csv,
    erfc_complex,
    exact_gaussian_box,
    faddeeva,
    hermite,
    hestenes_coeffs,
    integrate_0_to_t,
    laguerre,
    phi_factor,
    psi,
    run_convergence,
    saturation_bound,
    selftest,
    table3_field,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "Error",
    "OrderTooLarge",
    "ToleranceNotReached",
    "box_factor",
    "chi",
    "convergence_csv",
    "erfc_complex",
    "exact_gaussian_box",
    "faddeeva",
    "hermite",
    "hestenes_coeffs",
    "integrate_0_to_t",
    "laguerre",
    "phi_factor",
    "psi",
    "run_convergence",
    "saturation_bound",
    "selftest",
    "table3_field",
]
