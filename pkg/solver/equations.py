"""
The integrating-factor difference equations of both families, rewritten in
forward form x_{n+1} = a_n x_n + b_n.

Labels keep the published equation tag so reports can be audited against
the source derivation.
"""
from fractions import Fraction
from typing import List, Sequence

from algebra import QContext
from families import WeightFamily
from .recurrence import FirstOrderRecurrence


def sw_R_recurrence(ctx: QContext) -> FirstOrderRecurrence:
    """q R_n - R_{n-1} = -(1+q) q^{n-1}, R_0 = 1/(1-q)."""
    q = ctx.q
    return FirstOrderRecurrence(
        coefficients=lambda n: (1 / q, -(1 + q) * ctx.qpow(n - 1)),
        initial=1 / (1 - q),
        label="(3.6) qR_n - R_{n-1} = -(1+q)q^{n-1}  =>  R_{n+1} = R_n/q - (1+q)q^{n-1}",
    )


def sw_r_recurrence(ctx: QContext) -> FirstOrderRecurrence:
    """r_n - q r_{n+1} = q^{-1/2}, r_0 = 0."""
    q = ctx.q
    return FirstOrderRecurrence(
        coefficients=lambda n: (1 / q, -1 / (ctx.s * q)),
        initial=Fraction(0),
        label="(3.9) r_n - q r_{n+1} = q^{-1/2}  =>  r_{n+1} = (r_n - q^{-1/2})/q",
    )


def qlaguerre_r_recurrence(ctx: QContext, alphas: Sequence[Fraction]) -> FirstOrderRecurrence:
    """r_{n+1} - q r_n = -q^n alpha_n - 1, r_0 = 0."""
    return FirstOrderRecurrence(
        coefficients=lambda n: (ctx.q, -ctx.qpow(n) * alphas[n] - 1),
        initial=Fraction(0),
        label="(4.9) r_{n+1} = q r_n - q^n alpha_n - 1",
    )


def qlaguerre_scaled_p1_recurrence(ctx: QContext, family: WeightFamily) -> FirstOrderRecurrence:
    """
    Integrating-factor form for y_n = p1(n) q^{2n-2}.

    y_{n+1} - y_n = (1+q) q^{2n-1} - (1 + q^{-alpha}) q^{n-1}, y_0 = 0;
    recover p1 with `unscale_p1`.
    """
    q = ctx.q
    q_minus_alpha = ctx.qpow(-family.int_alpha)
    return FirstOrderRecurrence(
        coefficients=lambda n: (
            Fraction(1),
            (1 + q) * ctx.qpow(2 * n - 1) - (1 + q_minus_alpha) * ctx.qpow(n - 1),
        ),
        initial=Fraction(0),
        label="(4.10) y_n = p1(n)q^{2n-2}:  y_{n+1} = y_n + (1+q)q^{2n-1} - (1+q^-alpha)q^{n-1}",
    )


def unscale_p1(ctx: QContext, scaled: Sequence[Fraction]) -> List[Fraction]:
    """p1(n) = y_n q^{2-2n}."""
    return [y * ctx.qpow(2 - 2 * n) for n, y in enumerate(scaled)]


def qlaguerre_printed_R_recurrence(ctx: QContext) -> FirstOrderRecurrence:
    """
    q R_{n+1} - R_n = q^{n+1} - q^n, R_0 = 1/(1-q).

    This is the R-only equation obtained from the constant term at
    infinity; its solution disagrees with the R_n pinned down by the
    residue system from n=1 on, and it is only used to assert that.
    """
    q = ctx.q
    return FirstOrderRecurrence(
        coefficients=lambda n: (1 / q, ctx.qpow(n) - ctx.qpow(n - 1)),
        initial=1 / (1 - q),
        label="(4.13) qR_{n+1} - R_n = q^{n+1} - q^n  =>  R_{n+1} = R_n/q + q^n - q^{n-1}",
    )


def qlaguerre_beta_recurrence(
    ctx: QContext, family: WeightFamily, alphas: Sequence[Fraction]
) -> FirstOrderRecurrence:
    """beta_{n+1} q^{2n+1} - beta_n q^{2n-1} = (1-q) q^{-1-alpha} alpha_n, beta_0 = 0."""
    q = ctx.q
    factor = (1 - q) * ctx.qpow(-1 - family.int_alpha)
    return FirstOrderRecurrence(
        coefficients=lambda n: (ctx.qpow(-2), factor * alphas[n] * ctx.qpow(-2 * n - 1)),
        initial=Fraction(0),
        label="(4.15) beta_{n+1} = beta_n q^{-2} + (1-q)q^{-1-alpha} alpha_n q^{-2n-1}",
    )
