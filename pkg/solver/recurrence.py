"""
First-order linear recurrences x_{n+1} = a_n x_n + b_n in exact arithmetic.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, NamedTuple, Sequence, Tuple

from loguru import logger

StepCoefficients = Callable[[int], Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class FirstOrderRecurrence:
    """
    Normalized forward form of a first-order difference equation.

    `coefficients(n)` returns (a_n, b_n); `label` names the source
    equation and the rewriting applied to reach forward form.
    """

    coefficients: StepCoefficients
    initial: Fraction
    label: str

    def step(self, n: int, value: Fraction) -> Fraction:
        a, b = self.coefficients(n)
        if a == 0:
            raise ZeroDivisionError(f"{self.label}: a_{n} = 0, recurrence not forward solvable")
        return a * value + b


class StepCheck(NamedTuple):
    """One index of verify_solution: the candidate value and what the recurrence demands."""

    n: int
    expected: Fraction
    candidate: Fraction
    held: bool


def solve_forward(rec: FirstOrderRecurrence, N: int) -> List[Fraction]:
    """
    x_0..x_N.

    Args:
        rec: recurrence in forward form
        N: last index

    Returns:
        List of N+1 exact values
    """
    values = [Fraction(rec.initial)]
    for n in range(N):
        values.append(rec.step(n, values[-1]))
    logger.debug(f"solved {rec.label} up to n={N}")
    return values


def telescope_sum(seq: Sequence[Fraction], n: int) -> Fraction:
    """sum_{j<n} seq[j]."""
    if n > len(seq):
        raise ValueError(f"telescope_sum needs {n} terms, sequence has {len(seq)}")
    return sum(seq[:n], Fraction(0))


def verify_solution(rec: FirstOrderRecurrence, candidate: Sequence[Fraction], N: int) -> List[StepCheck]:
    """
    Check a candidate sequence against a recurrence index by index.

    n=0 compares with the initial value; n >= 1 compares candidate[n]
    with the step applied to candidate[n-1].
    """
    if len(candidate) <= N:
        raise ValueError(f"candidate covers n <= {len(candidate) - 1}, need n <= {N}")
    checks = [StepCheck(0, Fraction(rec.initial), candidate[0], candidate[0] == rec.initial)]
    for n in range(1, N + 1):
        expected = rec.step(n - 1, candidate[n - 1])
        checks.append(StepCheck(n, expected, candidate[n], expected == candidate[n]))
    return checks
