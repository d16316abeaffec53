"""High-precision tanh-sinh checks of the integral definitions."""
from .integrate import (
    HalfLineIntegrator,
    QuadResult,
    QuadratureConvergenceError,
    integrate_halfline,
    mp_polynomial,
    mp_rational,
    to_mpf,
)
from .checks import IntegrabilityError, QuadratureChecker, check_I_ratio

__all__ = [
    "HalfLineIntegrator",
    "QuadResult",
    "QuadratureConvergenceError",
    "integrate_halfline",
    "mp_polynomial",
    "mp_rational",
    "to_mpf",
    "IntegrabilityError",
    "QuadratureChecker",
    "check_I_ratio",
]
