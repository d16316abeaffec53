"""
Recurrence coefficients from moments alone.

The oracle never looks at a closed form: it runs the Chebyshev
algorithm on the exact moment ratios, so every alpha_n, beta_n here is an
independent ground truth for the closed-form layer.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from loguru import logger

from algebra import from_sympy_rational, to_sympy_rational
from families import MomentLadder


class MomentSequenceError(ValueError):
    """The moment functional is not positive definite (some beta_n <= 0)."""


@dataclass(frozen=True)
class RecurrenceTable:
    """
    alpha_0..alpha_N, beta_0..beta_N (beta_0 = 0), zeta_n/zeta_0 for
    n <= N and p1(0)..p1(N+1).

    `source` records where the coefficients came from ("oracle" or
    "closed").
    """

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]
    zeta_ratio: Tuple[Fraction, ...]
    p1: Tuple[Fraction, ...]
    source: str = "oracle"

    @classmethod
    def from_coefficients(
        cls, alpha: Sequence[Fraction], beta: Sequence[Fraction], source: str
    ) -> "RecurrenceTable":
        """Derive zeta ratios (product of betas) and p1 (minus partial sums of alpha)."""
        if len(alpha) != len(beta):
            raise ValueError("alpha and beta must cover the same indices")
        zeta = [Fraction(1)]
        for b in beta[1:]:
            zeta.append(zeta[-1] * b)
        p1 = [Fraction(0)]
        for a in alpha:
            p1.append(p1[-1] - a)
        return cls(tuple(alpha), tuple(beta), tuple(zeta), tuple(p1), source)

    @property
    def size(self) -> int:
        """Largest index N covered by alpha and beta."""
        return len(self.beta) - 1


def chebyshev_recurrence(moments: MomentLadder, N: int) -> RecurrenceTable:
    """
    Chebyshev algorithm on monomial moments, in exact arithmetic.

    Uses m_k/m_0 for k <= 2N+1 and returns alpha_n, beta_n for n <= N.
    sigma[k][l] is the functional applied to x^l P_k(x).

    Args:
        moments: moment ladder of the family
        N: largest index needed

    Returns:
        RecurrenceTable with source "oracle"

    Raises:
        MomentSequenceError: a computed beta_n is not positive
    """
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    count = N + 1
    mu = [moments.ratio(k) for k in range(2 * count)]

    previous: List[Fraction] = [Fraction(0)] * (2 * count)
    current: List[Fraction] = list(mu)
    alpha = [mu[1] / mu[0]]
    beta = [Fraction(0)]

    for k in range(1, count):
        nxt = [Fraction(0)] * (2 * count)
        for l in range(k, 2 * count - k):
            nxt[l] = current[l + 1] - alpha[k - 1] * current[l] - beta[k - 1] * previous[l]
        b = nxt[k] / current[k - 1]
        if b <= 0:
            raise MomentSequenceError(
                f"beta_{k} = {b} <= 0: moments of {moments.family} at {moments.ctx} "
                "are not positive definite"
            )
        alpha.append(nxt[k + 1] / nxt[k] - current[k] / current[k - 1])
        beta.append(b)
        previous, current = current, nxt

    logger.debug(f"chebyshev oracle {moments.family} {moments.ctx}: N={N}")
    return RecurrenceTable.from_coefficients(alpha, beta, "oracle")


def bareiss_determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by sympy's fraction-free Bareiss elimination."""
    if len(matrix) == 0:
        return Fraction(1)
    m = sympy.Matrix([[to_sympy_rational(c) for c in row] for row in matrix])
    return from_sympy_rational(m.det(method="bareiss"))


def hankel_determinant(moments: MomentLadder, size: int) -> Fraction:
    """det [m_{i+j}/m_0] for 0 <= i, j < size; 1 for size 0."""
    return bareiss_determinant(
        [[moments.ratio(i + j) for j in range(size)] for i in range(size)]
    )


def hankel_beta(moments: MomentLadder, n: int) -> Fraction:
    """
    beta_n = D_{n+1} D_{n-1} / D_n^2 from Hankel determinants.

    Secondary spot check of the Chebyshev oracle; determinant sizes grow
    with n, so keep n small.
    """
    if n < 1:
        raise ValueError(f"hankel_beta needs n >= 1, got {n}")
    d_prev = hankel_determinant(moments, n - 1)
    d_n = hankel_determinant(moments, n)
    d_next = hankel_determinant(moments, n + 1)
    return d_next * d_prev / (d_n * d_n)
