"""Explicit formulas: recurrence coefficients, p1, residue data, ladder pairs."""
from .coefficients import (
    alpha_from_residues,
    beta_from_p1,
    beta_from_residues,
    closed_table,
    p1_closed,
    recurrence_closed,
    sw_p1_closed,
)
from .ladder import LadderPair, ResidueData, ladder_pair, residues_closed

__all__ = [
    "alpha_from_residues",
    "beta_from_p1",
    "beta_from_residues",
    "closed_table",
    "p1_closed",
    "recurrence_closed",
    "sw_p1_closed",
    "LadderPair",
    "ResidueData",
    "ladder_pair",
    "residues_closed",
]
