"""
Monic orthogonal basis built from a recurrence table, and exact checks
against the moment functional.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from loguru import logger

from algebra import BivariatePolynomial, Polynomial
from families import MomentLadder
from .chebyshev import RecurrenceTable


@dataclass(frozen=True)
class OrthoBasis:
    """P_0..P_N, monic, deg P_n = n."""

    polys: Tuple[Polynomial, ...]

    def __getitem__(self, n: int) -> Polynomial:
        return self.polys[n]

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def size(self) -> int:
        return len(self.polys) - 1


def generate_monic(table: RecurrenceTable, N: int) -> OrthoBasis:
    """
    P_0 = 1, P_1 = x - alpha_0, P_{n+1} = (x - alpha_n) P_n - beta_n P_{n-1}.

    Args:
        table: recurrence coefficients covering indices < N
        N: degree of the last polynomial

    Returns:
        OrthoBasis with P_0..P_N
    """
    if N > len(table.alpha):
        raise ValueError(f"table covers alpha_n for n < {len(table.alpha)}, need n < {N}")
    x = Polynomial.x()
    polys = [Polynomial.constant(1)]
    prev = Polynomial()
    for n in range(N):
        nxt = (x - table.alpha[n]) * polys[-1] - prev * table.beta[n]
        prev = polys[-1]
        polys.append(nxt)
    return OrthoBasis(tuple(polys))


def p1_of(basis: OrthoBasis, n: int) -> Fraction:
    """Coefficient of x^{n-1} in P_n; p1(0) = 0."""
    if n == 0:
        return Fraction(0)
    return basis[n].coefficient(n - 1)


def zeta_ratio(table: RecurrenceTable, n: int) -> Fraction:
    """zeta_n / zeta_0 = beta_1 ... beta_n."""
    return table.zeta_ratio[n]


def moment_pairing(moments: MomentLadder, p: Polynomial, r: Optional[Polynomial] = None) -> Fraction:
    """Moment functional L(p r) / m_0, exact."""
    product = p if r is None else p * r
    return sum(
        (c * moments.ratio(k) for k, c in enumerate(product.coeffs) if c),
        Fraction(0),
    )


def cd_identity_check(basis: OrthoBasis, table: RecurrenceTable, n: int) -> bool:
    """
    Christoffel-Darboux as an exact bivariate identity.

    Compares zeta_{n-1} (x - y) sum_{k<n} P_k(x)P_k(y)/zeta_k with
    P_n(x)P_{n-1}(y) - P_n(y)P_{n-1}(x); zetas enter as ratios to zeta_0.
    """
    if n < 1:
        raise ValueError(f"Christoffel-Darboux needs n >= 1, got {n}")
    kernel = BivariatePolynomial()
    for k in range(n):
        weight = table.zeta_ratio[n - 1] / table.zeta_ratio[k]
        kernel = kernel + BivariatePolynomial.outer(basis[k], basis[k]).scale(weight)
    lhs = kernel.times_x_minus_y()
    rhs = BivariatePolynomial.outer(basis[n], basis[n - 1]) - BivariatePolynomial.outer(
        basis[n - 1], basis[n]
    )
    held = lhs == rhs
    if not held:
        logger.warning(f"Christoffel-Darboux failed at n={n}")
    return held
