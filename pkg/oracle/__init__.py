"""Moment oracle: recurrence coefficients and bases from moments alone."""
from .chebyshev import (
    MomentSequenceError,
    RecurrenceTable,
    bareiss_determinant,
    chebyshev_recurrence,
    hankel_beta,
    hankel_determinant,
)
from .basis import (
    OrthoBasis,
    cd_identity_check,
    generate_monic,
    moment_pairing,
    p1_of,
    zeta_ratio,
)

__all__ = [
    "MomentSequenceError",
    "RecurrenceTable",
    "bareiss_determinant",
    "chebyshev_recurrence",
    "hankel_beta",
    "hankel_determinant",
    "OrthoBasis",
    "cd_identity_check",
    "generate_monic",
    "moment_pairing",
    "p1_of",
    "zeta_ratio",
]
