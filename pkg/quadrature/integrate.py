"""
Tanh-sinh integration over (0, inf) after the substitution x = e^t.

The Stieltjes-Wigert weight becomes a Gaussian in t and the q-Laguerre
weight decays like one for large t, so the t-axis is cut at t_max where
the weight has dropped below 2^-(precision+64), and split into pieces of
width 2 ln(1/q).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence

from loguru import logger
from mpmath import mp

from algebra import Polynomial, QContext, RationalFunction
from config import config
from families import WeightFamily, weight_eval_numeric


class QuadratureConvergenceError(RuntimeError):
    """Refinement hit the level cap before successive levels agreed."""


@dataclass(frozen=True)
class QuadResult:
    """
    value and error_estimate are mpf; error_estimate is the level-to-level
    difference reported by the tanh-sinh rule, not a bound.
    """

    value: object
    error_estimate: object
    evaluations: int
    converged: bool


def to_mpf(value):
    """Exact Fraction/int to mpf at the current working precision."""
    if isinstance(value, (int, Fraction)):
        value = Fraction(value)
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def mp_polynomial(p: Polynomial) -> Callable:
    """Numeric Horner evaluator; coefficients are converted once per working precision."""
    coeffs = list(reversed(p.coeffs))
    converted: Dict[int, List] = {}

    def evaluate(x):
        table = converted.get(mp.prec)
        if table is None:
            table = converted[mp.prec] = [to_mpf(c) for c in coeffs]
        acc = mp.zero
        for c in table:
            acc = acc * x + c
        return acc

    return evaluate


def mp_rational(f: RationalFunction) -> Callable:
    num = mp_polynomial(f.numerator)
    den = mp_polynomial(f.denominator)
    return lambda x: num(x) / den(x)


def _run_quad(
    integrand_t: Callable,
    points: Sequence,
    precision: int,
    scale=None,
    strict: bool = False,
) -> QuadResult:
    calls = [0]

    def counted(t):
        calls[0] += 1
        return integrand_t(t)

    with mp.workprec(precision + config.GUARD_BITS):
        value, error = mp.quad(
            counted,
            list(points),
            method="tanh-sinh",
            error=True,
            maxdegree=config.QUADRATURE_LEVEL_CAP,
        )
        reference = abs(value)
        if scale is not None:
            reference = max(reference, abs(to_mpf(scale)))
        threshold = mp.ldexp(max(reference, mp.mpf(2) ** -precision), -(precision // 2))
        converged = bool(error <= threshold)

    if not converged:
        message = f"tanh-sinh did not converge: value={mp.nstr(value, 15)} error={mp.nstr(error, 5)}"
        if strict:
            raise QuadratureConvergenceError(message)
        logger.warning(message)
    return QuadResult(value, error, calls[0], converged)


def integrate_halfline(
    f: Callable,
    precision: int,
    points: Optional[Sequence] = None,
    scale=None,
    strict: bool = False,
) -> QuadResult:
    """
    Integrate f over (0, inf) via x = e^t.

    Args:
        f: integrand, called with an mpf x > 0
        precision: target precision in bits
        points: breakpoints on the t-axis (default [-inf, 0, inf])
        scale: magnitude the error estimate is judged against when the
            integral itself cancels to ~0
        strict: raise QuadratureConvergenceError instead of flagging

    Returns:
        QuadResult
    """
    if precision < config.MIN_PRECISION_BITS:
        raise ValueError(f"precision must be >= {config.MIN_PRECISION_BITS} bits, got {precision}")

    def integrand(t):
        x = mp.exp(t)
        return f(x) * x

    if points is None:
        points = [mp.ninf, 0, mp.inf]
    return _run_quad(integrand, points, precision, scale, strict)


@dataclass
class HalfLineIntegrator:
    """
    Weighted integrals int g(x) w(x) dx for one (family, q, precision).

    All integrals share the same breakpoints and hence the same tanh-sinh
    nodes, so (e^t, w(e^t) e^t) is cached per node in a bounded LRU.
    """

    family: WeightFamily
    ctx: QContext
    precision: int
    cache_size: int = config.NODE_CACHE_SIZE

    def __post_init__(self):
        if self.precision < config.MIN_PRECISION_BITS:
            raise ValueError(
                f"precision must be >= {config.MIN_PRECISION_BITS} bits, got {self.precision}"
            )
        self.points = self._breakpoints()
        self._node = lru_cache(maxsize=self.cache_size)(self._evaluate_node)

    def _breakpoints(self) -> List:
        with mp.workprec(self.precision + config.GUARD_BITS):
            width = -mp.log(to_mpf(self.ctx.q))
            spread = mp.sqrt(2 * width * (self.precision + config.TAIL_GUARD_BITS) * mp.ln2)
            t_max = 16 * width + spread + 8
            points = [mp.ninf]
            t = -2 * width
            while t < t_max:
                points.append(t)
                t += 2 * width
            points.append(t_max)
        logger.debug(
            f"half-line domain {self.family} {self.ctx}: {len(points) - 1} pieces, "
            f"t_max={mp.nstr(t_max, 6)}"
        )
        return points

    def _evaluate_node(self, t):
        x = mp.exp(t)
        return x, weight_eval_numeric(self.family, self.ctx, x, self.precision) * x

    def weight_dt(self, t):
        """w(e^t) e^t, cached."""
        return self._node(t)[1]

    def cache_info(self):
        return self._node.cache_info()

    def clear(self):
        self._node.cache_clear()

    def integrate(self, g: Callable, scale=None, strict: bool = False) -> QuadResult:
        """int_0^inf g(x) w(x) dx; g is called with an mpf x."""

        def integrand(t):
            x, w_dt = self._node(t)
            return g(x) * w_dt

        return _run_quad(integrand, self.points, self.precision, scale, strict)

    def integrate_with_weight(self, f: Callable, scale=None, strict: bool = False) -> QuadResult:
        """int_0^inf f(x, w(x)) dx on the same domain, for integrands that combine w with shifted copies."""

        def integrand(t):
            x, w_dt = self._node(t)
            return f(x, w_dt / x) * x

        return _run_quad(integrand, self.points, self.precision, scale, strict)
