"""
Identity instances: two fully assembled sides plus an expectation.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from loguru import logger

from algebra import Polynomial, RationalFunction, ratfun_identity_equal
from .report import Expectation, ReportEntry

Side = Union[RationalFunction, Polynomial, Fraction, int]


@dataclass(frozen=True)
class IdentityInstance:
    """
    lhs == rhs as rational functions of x (scalars are constants).

    The comparison is exact: denominators cleared, coefficients compared.
    """

    label: str
    equation: str
    lhs: Side
    rhs: Side
    n: Optional[int] = None
    expectation: Expectation = Expectation.MUST_HOLD

    def check(self) -> ReportEntry:
        held = ratfun_identity_equal(self.lhs, self.rhs)
        detail = "" if held else self._mismatch()
        entry = ReportEntry(
            label=self.label,
            equation=self.equation,
            n=self.n,
            passed=held,
            expectation=self.expectation,
            detail=detail,
        )
        if not entry.as_expected:
            logger.warning(f"{self.label}: {entry.status} {detail}")
        else:
            logger.debug(f"{self.label}: {entry.status}")
        return entry

    def _mismatch(self) -> str:
        difference = RationalFunction.coerce(self.lhs) - RationalFunction.coerce(self.rhs)
        if difference.is_constant():
            return f"lhs - rhs = {difference.constant_value()}"
        return f"lhs - rhs = {difference}"
