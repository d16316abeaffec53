"""
Report models shared by the verifier, the quadrature checks and the CLI.

Exact values travel as str(Fraction); residuals as mpmath strings. No
floats, no timestamps: identical runs serialize identically.
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict


class Expectation(str, Enum):
    MUST_HOLD = "must_hold"
    DOCUMENTED_DISCREPANCY = "documented_discrepancy"


class ReportEntry(BaseModel):
    """One checked identity."""

    model_config = ConfigDict(frozen=True)

    label: str
    equation: str
    n: Optional[int] = None
    passed: bool
    expectation: Expectation = Expectation.MUST_HOLD
    detail: str = ""

    @property
    def as_expected(self) -> bool:
        if self.expectation is Expectation.MUST_HOLD:
            return self.passed
        return not self.passed

    @property
    def status(self) -> str:
        if self.expectation is Expectation.MUST_HOLD:
            return "PASS" if self.passed else "FAIL"
        if self.passed:
            return "documented discrepancy: UNEXPECTEDLY HELD"
        return "documented discrepancy: failed as expected"


class ReportSummary(BaseModel):
    """
    passed: must-hold entries that held.
    failed: entries whose outcome was not the expected one.
    expected_failures: documented discrepancies that failed.
    """

    total: int
    passed: int
    failed: int
    expected_failures: int

    @property
    def success(self) -> bool:
        return self.failed == 0


class VerificationReport(BaseModel):
    """Ordered entries of an exact suite."""

    entries: List[ReportEntry]

    @property
    def summary(self) -> ReportSummary:
        return ReportSummary(
            total=len(self.entries),
            passed=sum(
                1 for e in self.entries if e.expectation is Expectation.MUST_HOLD and e.passed
            ),
            failed=sum(1 for e in self.entries if not e.as_expected),
            expected_failures=sum(
                1
                for e in self.entries
                if e.expectation is Expectation.DOCUMENTED_DISCREPANCY and not e.passed
            ),
        )

    @property
    def success(self) -> bool:
        return self.summary.success

    def unexpected(self) -> List[ReportEntry]:
        return [e for e in self.entries if not e.as_expected]


class NumericCheck(BaseModel):
    """One quadrature comparison: computed value against an exact or closed-form target."""

    model_config = ConfigDict(frozen=True)

    label: str
    target: str
    value: str
    residual: str
    tolerance: str
    mode: str  # "relative" or "absolute"
    within: bool
    converged: bool = True
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.within and self.converged

    @property
    def status(self) -> str:
        if not self.converged:
            return "NOT CONVERGED"
        return "PASS" if self.within else "FAIL"


def summarize_numeric(checks: List[NumericCheck]) -> ReportSummary:
    passed = sum(1 for c in checks if c.passed)
    return ReportSummary(
        total=len(checks), passed=passed, failed=len(checks) - passed, expected_failures=0
    )
