"""Exact identity verification and report models."""
from .report import (
    Expectation,
    NumericCheck,
    ReportEntry,
    ReportSummary,
    VerificationReport,
    summarize_numeric,
)
from .identities import IdentityInstance
from .ladder_verifier import LadderVerifier, run_suite

__all__ = [
    "Expectation",
    "NumericCheck",
    "ReportEntry",
    "ReportSummary",
    "VerificationReport",
    "summarize_numeric",
    "IdentityInstance",
    "LadderVerifier",
    "run_suite",
]
