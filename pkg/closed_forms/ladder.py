"""
Residue data R_n, r_n and the ladder coefficient functions A_n, B_n.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from loguru import logger

from algebra import QContext, RationalFunction, q_integer
from families import WeightFamily
from .coefficients import recurrence_closed


@dataclass(frozen=True)
class ResidueData:
    """
    R_0..R_N and r_0..r_N.

    R_n, r_n are the coefficients of the pole at x=0 of A_n and B_n
    (of order 2 for Stieltjes-Wigert, order 1 for q-Laguerre).
    """

    family: WeightFamily
    R: Tuple[Fraction, ...]
    r: Tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.R) - 1

    def S(self, n: int) -> Fraction:
        """S_n = R_0 + ... + R_n."""
        return sum(self.R[: n + 1], Fraction(0))


@dataclass(frozen=True)
class LadderPair:
    """A_n and B_n as exact rational functions."""

    n: int
    A: RationalFunction
    B: RationalFunction


def residues_closed(family: WeightFamily, ctx: QContext, N: int) -> ResidueData:
    """
    Residue data for n <= N.

    SW: R_n = q^n/(1-q), r_n = (1 - q^{-n}) / ((1-q) sqrt(q)).
    qLag: r_{n+1} = q r_n - q^n alpha_n - 1 from r_0 = 0, then
    R_n = -(r_{n+1} + r_n + (1 - q^{-a})/(1-q)) / alpha_n. No closed form
    for the q-Laguerre R_n is assumed.

    Args:
        family: weight family on the exact ladder path
        ctx: base parameter
        N: last index

    Returns:
        ResidueData

    Raises:
        ExactPathError: q-Laguerre with alpha < 1
    """
    family.require_ladder()
    q = ctx.q
    if family.is_sw:
        R = tuple(ctx.qpow(n) / (1 - q) for n in range(N + 1))
        r = tuple((1 - ctx.qpow(-n)) / ((1 - q) * ctx.s) for n in range(N + 1))
        return ResidueData(family, R, r)

    alphas = [recurrence_closed(family, ctx, n)[0] for n in range(N + 1)]
    r = [Fraction(0)]
    for n in range(N + 1):
        r.append(q * r[n] - ctx.qpow(n) * alphas[n] - 1)
    shift = (1 - ctx.qpow(-family.int_alpha)) / (1 - q)
    R = []
    for n in range(N + 1):
        assert alphas[n] > 0, f"alpha_{n} = {alphas[n]} must be positive"
        R.append(-(r[n + 1] + r[n] + shift) / alphas[n])
    logger.debug(f"residues {family} {ctx}: R_0..R_{N} from the residue system")
    return ResidueData(family, tuple(R), tuple(r[: N + 1]))


def ladder_pair(
    family: WeightFamily, ctx: QContext, n: int, residues: ResidueData, p1: Fraction
) -> LadderPair:
    """
    Assemble A_n, B_n.

    SW:   A_n = R_n/x^2,  B_n = r_n/x^2 - [n]_q/x
    qLag: A_n = R_n/x - q^n/((1-q)(x+1)),  B_n = r_n/x - q^{n-1} p1(n)/(x+1)

    `p1` is only read for q-Laguerre.
    """
    if n > residues.size:
        raise ValueError(f"residue data cover n <= {residues.size}, need {n}")
    R_n, r_n = residues.R[n], residues.r[n]
    if family.is_sw:
        A = RationalFunction.simple_pole(R_n, 0, order=2)
        B = RationalFunction.simple_pole(r_n, 0, order=2) - RationalFunction.simple_pole(
            q_integer(ctx, n), 0
        )
    else:
        A = RationalFunction.simple_pole(R_n, 0) - RationalFunction.simple_pole(
            ctx.qpow(n) / (1 - ctx.q), -1
        )
        B = RationalFunction.simple_pole(r_n, 0) - RationalFunction.simple_pole(
            ctx.qpow(n - 1) * p1, -1
        )
    return LadderPair(n, A, B)
