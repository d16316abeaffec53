"""
Explicit recurrence coefficients and p1(n) for both families, plus the
alternative routes to the same numbers used as cross-checks.
"""
from fractions import Fraction
from typing import Sequence, Tuple

from algebra import QContext
from families import WeightFamily
from oracle import RecurrenceTable


def recurrence_closed(family: WeightFamily, ctx: QContext, n: int) -> Tuple[Fraction, Fraction]:
    """
    (alpha_n, beta_n) from the explicit formulas.

    SW:   alpha_n = q^{-n-1/2} (q^{-n-1} + q^{-n} - 1),  beta_n = q^{-4n} - q^{-3n}
    qLag: alpha_n = q^{-2n-1-a} (1 + q - q^{n+1} - q^{n+a+1}),
          beta_n  = q^{-4n-2a+1} (1 - q^n)(1 - q^{n+a})

    Args:
        family: weight family (integer alpha for q-Laguerre)
        ctx: base parameter
        n: index, n >= 0 (beta_0 = 0)

    Returns:
        (alpha_n, beta_n)
    """
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    q = ctx.q
    if family.is_sw:
        alpha_n = ctx.power(-2 * n - 1) * (ctx.qpow(-n - 1) + ctx.qpow(-n) - 1)
        beta_n = ctx.qpow(-4 * n) - ctx.qpow(-3 * n)
        return alpha_n, beta_n

    a = family.int_alpha
    alpha_n = ctx.qpow(-2 * n - 1 - a) * (1 + q - ctx.qpow(n + 1) - ctx.qpow(n + a + 1))
    beta_n = ctx.qpow(-4 * n - 2 * a + 1) * (1 - ctx.qpow(n)) * (1 - ctx.qpow(n + a))
    return alpha_n, beta_n


def p1_closed(family: WeightFamily, ctx: QContext, n: int) -> Fraction:
    """(1-q) p1(n) = -q + (1 + q^{-a}) q^{1-n} - q^{-2n-a+1}; q-Laguerre only."""
    if family.is_sw:
        raise ValueError("p1_closed is the q-Laguerre formula; use sw_p1_closed")
    q = ctx.q
    a = family.int_alpha
    return (-q + (1 + ctx.qpow(-a)) * ctx.qpow(1 - n) - ctx.qpow(-2 * n - a + 1)) / (1 - q)


def sw_p1_closed(ctx: QContext, n: int) -> Fraction:
    """SW p1(n) = -sum_{j<n} alpha_j = -q^{1/2-n} (q^{-n} - 1) / (1 - q)."""
    q = ctx.q
    return -ctx.power(1 - 2 * n) * (ctx.qpow(-n) - 1) / (1 - q)


def closed_table(family: WeightFamily, ctx: QContext, N: int) -> RecurrenceTable:
    """RecurrenceTable for n <= N built from the explicit formulas."""
    pairs = [recurrence_closed(family, ctx, n) for n in range(N + 1)]
    return RecurrenceTable.from_coefficients(
        [a for a, _ in pairs], [b for _, b in pairs], "closed"
    )


def alpha_from_residues(ctx: QContext, r: Sequence[Fraction], n: int) -> Fraction:
    """SW: -alpha_n q^n = r_{n+1} - q r_n."""
    return -(r[n + 1] - ctx.q * r[n]) / ctx.qpow(n)


def beta_from_residues(
    ctx: QContext, R: Sequence[Fraction], r: Sequence[Fraction], n: int
) -> Fraction:
    """SW: beta_n = r_n (r_n - 1/(sqrt(q)(1-q))) / (R_n R_{n-1}), n >= 1."""
    if n < 1:
        raise ValueError(f"beta_from_residues needs n >= 1, got {n}")
    shift = 1 / (ctx.s * (1 - ctx.q))
    return r[n] * (r[n] - shift) / (R[n] * R[n - 1])


def beta_from_p1(family: WeightFamily, ctx: QContext, p1_n: Fraction, n: int) -> Fraction:
    """qLag: beta_n q^{2n-1} = -(1-q) q^{-1-a} p1(n)."""
    q = ctx.q
    return -(1 - q) * ctx.qpow(-1 - family.int_alpha) * p1_n / ctx.qpow(2 * n - 1)
