"""
The two weight families on (0, inf): Stieltjes-Wigert and q-Laguerre.

Exact path: Stieltjes-Wigert for any exact q; q-Laguerre for integer
alpha (alpha >= 1 wherever residue data at x=0 are involved). Numeric
path: any alpha > -1.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Optional, Union

from loguru import logger
from mpmath import mp

from algebra import Polynomial, QContext, RationalFunction, q_pochhammer
from config import config


class FamilyTag(str, Enum):
    """Weight family"""
    STIELTJES_WIGERT = "sw"
    Q_LAGUERRE = "qlaguerre"


class ExactPathError(ValueError):
    """Requested an exact computation outside the exact parameter range."""


@dataclass(frozen=True)
class WeightFamily:
    """
    Family tag plus the q-Laguerre parameter.

    alpha is stored as a Fraction; it must be > -1. Stieltjes-Wigert
    carries no parameter (its constant c is fixed to 1).
    """

    tag: FamilyTag
    alpha: Optional[Fraction] = None

    def __post_init__(self):
        tag = FamilyTag(self.tag)
        object.__setattr__(self, "tag", tag)
        if tag is FamilyTag.STIELTJES_WIGERT:
            if self.alpha is not None:
                raise ValueError("Stieltjes-Wigert weight takes no alpha")
            return
        if self.alpha is None:
            raise ValueError("q-Laguerre weight needs alpha")
        alpha = Fraction(self.alpha)
        if alpha <= -1:
            raise ValueError(f"q-Laguerre alpha must exceed -1, got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def stieltjes_wigert(cls) -> "WeightFamily":
        return cls(FamilyTag.STIELTJES_WIGERT)

    @classmethod
    def q_laguerre(cls, alpha: Union[int, Fraction, str]) -> "WeightFamily":
        return cls(FamilyTag.Q_LAGUERRE, Fraction(alpha))

    @property
    def is_sw(self) -> bool:
        return self.tag is FamilyTag.STIELTJES_WIGERT

    @property
    def int_alpha(self) -> int:
        """alpha as an int; only meaningful on the exact q-Laguerre path."""
        if self.is_sw:
            raise ValueError("Stieltjes-Wigert has no alpha")
        if self.alpha.denominator != 1:
            raise ExactPathError(
                f"alpha={self.alpha} is not an integer; q^-alpha is irrational, "
                "only the numeric path supports it"
            )
        return int(self.alpha)

    @property
    def supports_ladder(self) -> bool:
        """Residue data at x=0 are genuine integrals (not 0*inf limits)."""
        return self.is_sw or (self.alpha.denominator == 1 and self.alpha >= 1)

    def require_ladder(self) -> "WeightFamily":
        """
        Reject families where the integration-by-parts hypothesis fails.

        For alpha <= 0 the integral of w(y)/y diverges, so R_n and r_n are
        not defined by their integrals.
        """
        if not self.supports_ladder:
            raise ExactPathError(
                f"q-Laguerre alpha={self.alpha}: exact ladder verification needs integer "
                "alpha >= 1 (the integral of w(y)/y must converge for the "
                "integration-by-parts lemma to apply)"
            )
        return self

    @property
    def label(self) -> str:
        return "sw" if self.is_sw else f"qlaguerre alpha={self.alpha}"

    def __str__(self) -> str:
        return self.label


def potential(family: WeightFamily, ctx: QContext) -> RationalFunction:
    """
    u(x) = -D_{q^-1} w(x) / w(x) in canonical form.

    SW:   u = q/(1-q) (1/x - sqrt(q)/x^2)
    qLag: u = q/(1-q) ((1 - q^-alpha)/x + q^-alpha/(x+q))

    Args:
        family: weight family (integer alpha for q-Laguerre)
        ctx: base parameter

    Returns:
        RationalFunction
    """
    q = ctx.q
    prefactor = q / (1 - q)
    x = Polynomial.x()
    if family.is_sw:
        # (x - s) / x^2
        u = RationalFunction(x - ctx.s, x * x)
    else:
        q_minus_alpha = ctx.qpow(-family.int_alpha)
        u = RationalFunction.simple_pole(1 - q_minus_alpha, 0) + RationalFunction.simple_pole(
            q_minus_alpha, -q
        )
    result = u * prefactor
    logger.debug(f"potential {family} {ctx}: {result}")
    return result


def sw_total_mass(ctx: QContext, precision: int):
    """Integral of the SW weight (c=1): sqrt(-2 pi ln q) / sqrt(q)."""
    with mp.workprec(precision):
        q = mp.mpf(ctx.q.numerator) / ctx.q.denominator
        s = mp.mpf(ctx.s.numerator) / ctx.s.denominator
        return mp.sqrt(-2 * mp.pi * mp.log(q)) / s


def weight_eval_numeric(family: WeightFamily, ctx: QContext, x, precision: int):
    """
    Numeric weight value at x > 0.

    SW: exp((ln x)^2 / (2 ln q)); qLag: x^alpha / (-x;q)_inf with the
    product truncated once x q^K < 2^-(precision+guard).

    Args:
        family: weight family (any alpha > -1)
        ctx: base parameter
        x: positive mpmath number
        precision: target precision in bits

    Returns:
        mpf weight value
    """
    work = precision + config.GUARD_BITS
    with mp.workprec(work):
        x = mp.mpf(x)
        if x <= 0:
            raise ValueError(f"weight is defined on (0, inf), got x={x}")
        q = mp.mpf(ctx.q.numerator) / ctx.q.denominator
        if family.is_sw:
            return mp.exp(mp.log(x) ** 2 / (2 * mp.log(q)))
        alpha = mp.mpf(family.alpha.numerator) / family.alpha.denominator
        product = q_pochhammer(ctx, -x, precision=work).value
        return mp.power(x, alpha) / product


def qshift_weight_factor(family: WeightFamily, ctx: QContext, precision: int) -> Callable:
    """
    x -> w(x/q) / w(x), from the functional equation of each weight.

    SW:   w(x/q) = w(x) sqrt(q) / x
    qLag: w(x/q) = w(x) q^-alpha / (1 + x/q), since (-x/q;q)_inf = (1 + x/q)(-x;q)_inf
    """
    with mp.workprec(precision + config.GUARD_BITS):
        q = mp.mpf(ctx.q.numerator) / ctx.q.denominator
        if family.is_sw:
            root = mp.mpf(ctx.s.numerator) / ctx.s.denominator
            return lambda x: root / x
        alpha = mp.mpf(family.alpha.numerator) / family.alpha.denominator
        q_minus_alpha = mp.power(q, -alpha)
    return lambda x: q_minus_alpha / (1 + x / q)
