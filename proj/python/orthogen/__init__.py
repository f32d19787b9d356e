"""Recurrence coefficients of orthogonal polynomials and Gauss-type quadrature."""

from ._orthogen import (
    DiscretizationReport,
    OrthogenError,
    QuadratureRule,
    RecurrenceTable,
    chri,
    classical_coeffs,
    elliptic_moments,
    gauss,
    gchri,
    induced_legendre,
    lanczos,
    lobatto,
    log_weight_moments,
    mcdis,
    modified_chebyshev,
    nu0_jacobi,
    radau,
    stieltjes,
)

__all__ = [
    "DiscretizationReport",
    "OrthogenError",
    "QuadratureRule",
    "RecurrenceTable",
    "chri",
    "classical_coeffs",
    "elliptic_moments",
    "gauss",
    "gchri",
    "induced_legendre",
    "lanczos",
    "lobatto",
    "log_weight_moments",
    "mcdis",
    "modified_chebyshev",
    "nu0_jacobi",
    "radau",
    "stieltjes",
]
