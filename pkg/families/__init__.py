"""Weight families, potentials and moments."""
from .weights import (
    ExactPathError,
    FamilyTag,
    WeightFamily,
    potential,
    qshift_weight_factor,
    sw_total_mass,
    weight_eval_numeric,
)
from .moments import DivergentMomentError, MomentLadder, moment_ratio

__all__ = [
    "ExactPathError",
    "FamilyTag",
    "WeightFamily",
    "potential",
    "qshift_weight_factor",
    "sw_total_mass",
    "weight_eval_numeric",
    "DivergentMomentError",
    "MomentLadder",
    "moment_ratio",
]
