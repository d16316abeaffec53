"""
Exact moment ratios m_k / m_0 for both families.
"""
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from loguru import logger

from algebra import QContext
from .weights import WeightFamily


class DivergentMomentError(ValueError):
    """Requested a negative moment whose integral diverges at x=0."""


def moment_ratio(family: WeightFamily, ctx: QContext, k: int) -> Fraction:
    """
    m_k / m_0 for the family's weight.

    SW: s^{-k(k+2)} for every integer k (Gaussian integral after x = e^t).
    qLag: prod_{j=1..k} (q^{-(alpha+j)} - 1) for k >= 0; for k < 0 the
    reciprocal product over j = k+1..0, which needs alpha + k + 1 > 0.

    Args:
        family: weight family (integer alpha for q-Laguerre)
        ctx: base parameter
        k: moment index

    Returns:
        Exact ratio

    Raises:
        DivergentMomentError: x^{alpha+k} is not integrable at 0
    """
    if family.is_sw:
        return ctx.power(-k * (k + 2))

    alpha = family.int_alpha
    if k >= 0:
        result = Fraction(1)
        for j in range(1, k + 1):
            result *= ctx.qpow(-(alpha + j)) - 1
        return result

    if alpha + k + 1 <= 0:
        raise DivergentMomentError(
            f"moment m_{k} diverges for q-Laguerre alpha={alpha} "
            f"(needs alpha > {-k - 1})"
        )
    result = Fraction(1)
    for j in range(k + 1, 1):
        result /= ctx.qpow(-(alpha + j)) - 1
    return result


@dataclass
class MomentLadder:
    """
    Memoized map k -> m_k/m_0 for one (family, q).

    The memo is lock-guarded; one ladder may back several concurrent
    checks.
    """

    family: WeightFamily
    ctx: QContext
    _ratios: Dict[int, Fraction] = field(default_factory=dict, init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    def ratio(self, k: int) -> Fraction:
        with self._lock:
            cached = self._ratios.get(k)
            if cached is None:
                cached = moment_ratio(self.family, self.ctx, k)
                self._ratios[k] = cached
            return cached

    def __getitem__(self, k: int) -> Fraction:
        return self.ratio(k)

    def prefetch(self, kmax: int) -> "MomentLadder":
        """Fill ratios 0..kmax."""
        for k in range(kmax + 1):
            self.ratio(k)
        logger.debug(f"moment ladder {self.family} {self.ctx}: cached k <= {kmax}")
        return self
