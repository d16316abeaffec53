"""
q-calculus on exact polynomials: q-integers, D_q, D_{q^-1}, dilation and
the q-Pochhammer symbol.
"""
import math
from fractions import Fraction
from typing import NamedTuple, Optional, Union

import mpmath
from mpmath import mp

from .polynomial import Polynomial, Scalar
from .qcontext import QContext


class TruncatedProduct(NamedTuple):
    """Numeric (z;q)_inf together with the number of factors kept."""

    value: "mpmath.mpf"
    terms: int


def q_integer(ctx: QContext, n: int) -> Fraction:
    """[n]_q = (1 - q^n)/(1 - q)."""
    if n < 0:
        raise ValueError(f"q-integer needs n >= 0, got {n}")
    return (1 - ctx.qpow(n)) / (1 - ctx.q)


def dq_apply(ctx: QContext, f: Polynomial) -> Polynomial:
    """D_q f = (f(x) - f(qx)) / ((1-q)x), coefficientwise x^k -> [k]_q x^{k-1}."""
    return Polynomial(tuple(c * q_integer(ctx, k) for k, c in enumerate(f.coeffs))[1:])


def dq_inverse_apply(ctx: QContext, f: Polynomial) -> Polynomial:
    """D_{q^-1} f, coefficientwise x^k -> q^{1-k} [k]_q x^{k-1}."""
    return Polynomial(
        tuple(c * ctx.qpow(1 - k) * q_integer(ctx, k) for k, c in enumerate(f.coeffs))[1:]
    )


def dilate(f: Polynomial, c: Scalar) -> Polynomial:
    """f(c*x)."""
    return f.dilate(c)


def q_pochhammer(
    ctx: QContext,
    z,
    n: Optional[Union[int, float]] = None,
    precision: Optional[int] = None,
):
    """
    q-Pochhammer symbol (z;q)_n.

    Finite n gives the exact product prod_{k<n} (1 - z q^k). n=None (or
    math.inf) gives the infinite product numerically: factors are kept
    while |z| q^K >= 2^-precision, and the count K is returned with the
    value.

    Args:
        ctx: base parameter
        z: Fraction/int for the finite case; anything mpmath accepts for
            the infinite case
        n: number of factors, or None/inf
        precision: working precision in bits (infinite case only)

    Returns:
        Fraction for finite n, TruncatedProduct otherwise
    """
    if n is not None and n != math.inf:
        if n < 0:
            raise ValueError(f"q-Pochhammer needs n >= 0, got {n}")
        z = Fraction(z)
        result = Fraction(1)
        for k in range(int(n)):
            result *= 1 - z * ctx.qpow(k)
        return result

    if precision is None:
        raise ValueError("infinite q-Pochhammer product needs a target precision")

    with mp.workprec(precision):
        q = mp.mpf(ctx.q.numerator) / ctx.q.denominator
        z = z if isinstance(z, mpmath.mpf) else _to_mpf(z)
        eps = mp.ldexp(1, -precision)
        factors = []
        term = z
        while term != 0 and abs(term) >= eps:
            factors.append(1 - term)
            term *= q
        return TruncatedProduct(mp.fprod(factors), len(factors))


def _to_mpf(value):
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)
