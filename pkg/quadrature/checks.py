"""
Numeric checks of the integral definitions the exact layer never touches.

Every comparison is a ratio to int w, so the Stieltjes-Wigert constant c
and the unfixed zeta_0 cancel. Targets come from the exact layer (moment
ratios, oracle zetas, closed-form A_n, B_n); residuals are relative, or
absolute against a natural scale where the target is 0.
"""
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger
from mpmath import mp

from algebra import Polynomial, QContext, dq_apply
from closed_forms import ladder_pair, residues_closed
from config import config
from evaluation.report import NumericCheck
from families import (
    MomentLadder,
    WeightFamily,
    moment_ratio,
    potential,
    qshift_weight_factor,
    sw_total_mass,
)
from oracle import chebyshev_recurrence, generate_monic, p1_of
from .integrate import HalfLineIntegrator, QuadResult, mp_polynomial, mp_rational, to_mpf


class IntegrabilityError(ValueError):
    """Integration-by-parts inputs violate the lemma's integrability hypothesis."""


def _order_at_zero(p: Polynomial) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial has no order at 0")
    return next(k for k, c in enumerate(p.coeffs) if c != 0)


class QuadratureChecker:
    """
    High-precision checks for one (family, q).

    Exact data (oracle basis, residues, ladder pairs) are built lazily up
    to QUADCHECK_MAX_N + 1, so the integration-by-parts hypothesis can be
    tested for families outside the exact ladder range.
    """

    def __init__(
        self,
        family: WeightFamily,
        ctx: QContext,
        precision: int = config.DEFAULT_PRECISION_BITS,
        tolerance_exponent: int = config.DEFAULT_TOLERANCE_EXPONENT,
    ):
        self.family = family
        self.ctx = ctx
        self.precision = precision
        self.tolerance_exponent = tolerance_exponent
        self.zero_tolerance_exponent = (
            tolerance_exponent + config.ZERO_TOLERANCE_EXPONENT - config.DEFAULT_TOLERANCE_EXPONENT
        )
        self.integrator = HalfLineIntegrator(family, ctx, precision)
        self._products: Dict[int, Callable] = {}
        self.max_n = config.QUADCHECK_MAX_N
        logger.info(f"quadrature checker: {family} {ctx} precision={precision} bits")

    # ------------------------------------------------------------------
    # exact data
    # ------------------------------------------------------------------

    @cached_property
    def moments(self) -> MomentLadder:
        return MomentLadder(self.family, self.ctx)

    @cached_property
    def table(self):
        return chebyshev_recurrence(self.moments, self.max_n + 1)

    @cached_property
    def basis(self):
        return generate_monic(self.table, self.max_n + 1)

    @cached_property
    def residues(self):
        return residues_closed(self.family, self.ctx, self.max_n)

    @cached_property
    def pairs(self):
        return [
            ladder_pair(self.family, self.ctx, n, self.residues, p1_of(self.basis, n))
            for n in range(self.max_n + 1)
        ]

    @cached_property
    def u(self):
        return potential(self.family, self.ctx)

    @cached_property
    def mass(self) -> QuadResult:
        """int_0^inf w."""
        return self.integrator.integrate(lambda x: mp.one)

    def _require_n(self, n: int):
        if not 0 <= n <= self.max_n:
            raise ValueError(f"quadrature checks cover 0 <= n <= {self.max_n}, got {n}")

    def _qshift_product(self, n: int) -> Callable:
        """y -> P_n(y) P_n(y/q), memoized per node; (1.15), (1.6), (2.4) and R_n share it."""
        product = self._products.get(n)
        if product is None:
            P_n = mp_polynomial(self.basis[n])
            P_n_shift = mp_polynomial(self.basis[n].dilate(1 / self.ctx.q))
            product = lru_cache(maxsize=config.NODE_CACHE_SIZE)(lambda y: P_n(y) * P_n_shift(y))
            self._products[n] = product
        return product

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def _compare(
        self,
        label: str,
        value,
        target,
        results: Sequence[QuadResult],
        scale=None,
        detail: str = "",
    ) -> NumericCheck:
        """
        Relative residual |value - target| / |target|, or |value| / scale
        against the absolute tolerance when the target is exactly 0.
        """
        with mp.workprec(self.precision):
            value = mp.mpf(value)
            exact_zero = isinstance(target, (int, Fraction)) and target == 0
            target_mp = to_mpf(target)
            if exact_zero:
                denominator = abs(to_mpf(scale)) if scale is not None else mp.one
                residual = abs(value) / denominator
                tolerance = mp.mpf(10) ** -self.zero_tolerance_exponent
                mode = "absolute"
            else:
                residual = abs(value - target_mp) / abs(target_mp)
                tolerance = mp.mpf(10) ** -self.tolerance_exponent
                mode = "relative"
            within = bool(residual <= tolerance)
            converged = all(r.converged for r in results)
            check = NumericCheck(
                label=label,
                target=str(target) if isinstance(target, (int, Fraction)) else mp.nstr(target_mp, 30),
                value=mp.nstr(value, 30),
                residual=mp.nstr(residual, 5),
                tolerance=f"1e-{self.zero_tolerance_exponent if exact_zero else self.tolerance_exponent}",
                mode=mode,
                within=within,
                converged=converged,
                detail=detail,
            )
        if check.passed:
            logger.debug(f"{label}: residual {check.residual}")
        else:
            logger.warning(f"{label}: {check.status} residual {check.residual} > {check.tolerance}")
        return check

    def _normalized(self, g, zeta: Fraction, scale=None):
        """int g w / (zeta * int w), with the integral results."""
        result = self.integrator.integrate(g, scale=scale)
        with mp.workprec(self.precision + config.GUARD_BITS):
            value = result.value / (to_mpf(zeta) * self.mass.value)
        return value, [result, self.mass]

    # ------------------------------------------------------------------
    # checks
    # ------------------------------------------------------------------

    def check_total_mass(self) -> NumericCheck:
        """SW int w against sqrt(-2 pi ln q)/sqrt(q)."""
        if not self.family.is_sw:
            raise ValueError("closed-form total mass is only known for Stieltjes-Wigert")
        target = sw_total_mass(self.ctx, self.precision + config.GUARD_BITS)
        return self._compare("int w (Gaussian closed form)", self.mass.value, target, [self.mass])

    def check_moment_ratio(self, k: int) -> NumericCheck:
        """int x^k w / int w against the exact moment ratio."""
        value, results = self._normalized(lambda x: x ** k, Fraction(1))
        return self._compare(f"m_{k}/m_0", value, moment_ratio(self.family, self.ctx, k), results)

    def check_orthogonality(self, m: int, n: int) -> NumericCheck:
        """(1.1): int w P_m P_n / int w is zeta_n/zeta_0 for m == n, 0 otherwise."""
        self._require_n(m)
        self._require_n(n)
        P_m, P_n = mp_polynomial(self.basis[m]), mp_polynomial(self.basis[n])
        zeta = self.table.zeta_ratio
        if m == n:
            value, results = self._normalized(lambda x: P_m(x) * P_n(x), Fraction(1))
            return self._compare(f"(1.1) m={m} n={n}", value, zeta[n], results)
        with mp.workprec(self.precision):
            scale = mp.sqrt(to_mpf(zeta[m] * zeta[n]))
        value, results = self._normalized(
            lambda x: P_m(x) * P_n(x), Fraction(1), scale=scale * self.mass.value
        )
        return self._compare(f"(1.1) m={m} n={n}", value, 0, results, scale=scale)

    def check_u_moment_identities(self, n: int) -> List[NumericCheck]:
        """
        (1.15): int u P_n(y) P_n(y/q) w = 0
        (1.16): int u P_{n+1}(y) P_n(y/q) w / zeta_n = (1 - q^{n+1}) q / (1 - q)
        """
        self._require_n(n)
        self.family.require_ladder()
        q = self.ctx.q
        u = mp_rational(self.u)
        product = self._qshift_product(n)
        P_next = mp_polynomial(self.basis[n + 1])
        P_n_shift = mp_polynomial(self.basis[n].dilate(1 / q))
        zeta_n = self.table.zeta_ratio[n]

        with mp.workprec(self.precision):
            scale = to_mpf(zeta_n) * self.mass.value
        value, results = self._normalized(lambda y: u(y) * product(y), zeta_n, scale=scale)
        vanishing = self._compare(f"(1.15) n={n}", value, 0, results)

        value, results = self._normalized(lambda y: u(y) * P_next(y) * P_n_shift(y), zeta_n)
        target = (1 - self.ctx.qpow(n + 1)) * q / (1 - q)
        ratio = self._compare(f"(1.16) n={n}", value, target, results)
        return [vanishing, ratio]

    def check_ladder_integral_defs(self, n: int, x0) -> List[NumericCheck]:
        """
        A_n(x0), B_n(x0) from their defining integrals with the exact kernel
        (u(q x0) - u(y)) / (q x0 - y), against the closed forms.
        """
        self._require_n(n)
        self.family.require_ladder()
        x0 = Fraction(x0)
        if x0 <= 0:
            raise ValueError(f"x0 must be positive, got {x0}")
        q = self.ctx.q
        kernel = mp_rational(self.u.divided_difference(q * x0))
        pair = self.pairs[n]
        product = self._qshift_product(n)

        checks = []
        value, results = self._normalized(lambda y: kernel(y) * product(y), self.table.zeta_ratio[n])
        checks.append(self._compare(f"(1.6) A_{n}({x0})", value, pair.A(x0), results))
        if n >= 1:
            P_n = mp_polynomial(self.basis[n])
            P_prev_shift = mp_polynomial(self.basis[n - 1].dilate(1 / q))
            value, results = self._normalized(
                lambda y: kernel(y) * P_n(y) * P_prev_shift(y), self.table.zeta_ratio[n - 1]
            )
            checks.append(self._compare(f"(1.7) B_{n}({x0})", value, pair.B(x0), results))
        return checks

    def _require_integrable(self, fpoly: Polynomial, gpoly: Polynomial):
        if self.family.is_sw:
            return
        order = self.family.alpha + _order_at_zero(fpoly) + _order_at_zero(gpoly)
        if order <= 0:
            raise IntegrabilityError(
                f"integration by parts needs int f g dx/x finite at 0; with alpha={self.family.alpha}, "
                f"f={fpoly} w, g={gpoly} the integrand behaves like x^{order - 1}"
            )

    def check_integration_by_parts(self, fpoly: Polynomial, gpoly: Polynomial) -> NumericCheck:
        """
        Lemma: int f D_q g + (1/q) int g D_{q^-1} f = 0 for f = fpoly w,
        g = gpoly, with D_{q^-1} f evaluated pointwise from w(x) and w(x/q).

        Raises:
            IntegrabilityError: int f g dx/x diverges at 0
        """
        self._require_integrable(fpoly, gpoly)
        q = self.ctx.q
        f_mp, g_mp = mp_polynomial(fpoly), mp_polynomial(gpoly)
        dg = mp_polynomial(dq_apply(self.ctx, gpoly))
        f_shift = mp_polynomial(fpoly.dilate(1 / q))
        precision = self.precision

        with mp.workprec(precision + config.GUARD_BITS):
            q_mp = to_mpf(q)

        shift_factor = qshift_weight_factor(self.family, self.ctx, precision)

        def g_dq_inverse_f(x, w_x):
            w_shift = w_x * shift_factor(x)
            return g_mp(x) * (f_mp(x) * w_x - f_shift(x) * w_shift) / (x - x / q_mp)

        first = self.integrator.integrate(lambda x: f_mp(x) * dg(x))
        second = self.integrator.integrate_with_weight(g_dq_inverse_f)
        with mp.workprec(precision + config.GUARD_BITS):
            total = first.value + second.value / q_mp
            scale = abs(first.value) + abs(second.value / q_mp)
            if scale == 0:
                scale = self.mass.value
        return self._compare(
            f"(1.14) f=({fpoly})w g={gpoly}", total, 0, [first, second], scale=scale
        )

    def check_qshift_norm(self, j: int) -> NumericCheck:
        """(2.4): int P_j(y) P_j(y/q) w / (zeta_j int w) = q^{-j}."""
        self._require_n(j)
        value, results = self._normalized(self._qshift_product(j), self.table.zeta_ratio[j])
        return self._compare(f"(2.4) j={j}", value, self.ctx.qpow(-j), results)

    def check_residue_integral(self, n: int = 0) -> NumericCheck:
        """
        R_n from its defining integral of P_n(y) P_n(y/q) w(y)/y.

        SW:   R_n = int(...) / (zeta_n (1-q) sqrt(q))
        qLag: R_n = (q^{-a} - 1) int(...) / (zeta_n (1-q))
        """
        self._require_n(n)
        self.family.require_ladder()
        q = self.ctx.q
        product = self._qshift_product(n)
        if self.family.is_sw:
            prefactor = 1 / ((1 - q) * self.ctx.s)
        else:
            prefactor = (self.ctx.qpow(-self.family.int_alpha) - 1) / (1 - q)
        value, results = self._normalized(lambda y: product(y) / y, self.table.zeta_ratio[n])
        with mp.workprec(self.precision + config.GUARD_BITS):
            value = value * to_mpf(prefactor)
        return self._compare(f"R_{n} defining integral", value, self.residues.R[n], results)

    def integration_pairs(self) -> List[Tuple[Polynomial, Polynomial]]:
        """
        (f, g) polynomial pairs for the integration-by-parts lemma: the
        worked pairs of each family, then three pairs with f(0) = 0, for
        which the hypothesis holds at every alpha > -1.
        """
        one = Polynomial.constant(1)
        if self.family.is_sw:
            pairs = [(one, Polynomial.x()), (self.basis[1], self.basis[2])]
        else:
            pairs = [(one, Polynomial.monomial(2))]
        return pairs + [
            (Polynomial.from_roots([0, -1]), Polynomial.from_roots([2])),
            (Polynomial.x(), Polynomial((1, 0, 1))),
            (Polynomial.from_roots([0, 0, 3]), Polynomial((1, 2))),
        ]

    def clear_caches(self):
        """Drop the per-node weight and product memos."""
        self.integrator.clear()
        self._products.clear()

    def run_all(
        self,
        nmax: int = config.QUADCHECK_MAX_N,
        pairs: Optional[Sequence[Tuple[Polynomial, Polynomial]]] = None,
    ) -> List[NumericCheck]:
        """
        The quadcheck suite for this family, n <= min(nmax, QUADCHECK_MAX_N).

        Families without rational moments (non-integer alpha) only get the
        integration-by-parts and I-ratio checks. `pairs` replaces the
        default integration-by-parts pairs; every pair is checked against
        the integrability hypothesis before anything is integrated.

        Raises:
            IntegrabilityError: a pair violates the hypothesis
        """
        top = min(nmax, self.max_n)
        quadcheck = config.TOOL_CONFIG["quadcheck"]
        pairs = self.integration_pairs() if pairs is None else list(pairs)
        for fpoly, gpoly in pairs:
            self._require_integrable(fpoly, gpoly)

        checks: List[NumericCheck] = []
        exact_moments = self.family.is_sw or self.family.alpha.denominator == 1
        try:
            if self.family.is_sw:
                checks.append(self.check_total_mass())
            if exact_moments:
                lowest = -1 if self.family.is_sw or self.family.alpha > 0 else 0
                for k in range(lowest, 4):
                    checks.append(self.check_moment_ratio(k))
                for n in range(top + 1):
                    for m in range(n + 1):
                        checks.append(self.check_orthogonality(m, n))
                    checks.append(self.check_qshift_norm(n))

            if self.family.supports_ladder:
                for n in range(top + 1):
                    checks.extend(self.check_u_moment_identities(n))
                    for point in quadcheck["ladder_points"]:
                        checks.extend(self.check_ladder_integral_defs(n, Fraction(point)))
                    checks.append(self.check_residue_integral(n))

            for fpoly, gpoly in pairs:
                checks.append(self.check_integration_by_parts(fpoly, gpoly))
        finally:
            self.clear_caches()

        if not self.family.is_sw:
            for a in quadcheck["i_ratio_exponents"]:
                checks.append(
                    check_I_ratio(self.ctx, Fraction(a), self.precision, self.tolerance_exponent)
                )
        failed = sum(1 for c in checks if not c.passed)
        logger.info(f"quadcheck {self.family}: {len(checks) - failed}/{len(checks)} within tolerance")
        return checks


def check_I_ratio(ctx: QContext, a, precision: int = config.DEFAULT_PRECISION_BITS,
                  tolerance_exponent: int = config.DEFAULT_TOLERANCE_EXPONENT) -> NumericCheck:
    """
    int y^a / (-y;q)_inf dy  /  int y^{a-1} / (-y;q)_inf dy  =  q^{-a} - 1.

    The closed form of each integral has a pole at integer a, so only
    non-integer a > 0 is accepted; the ratio is the q-Laguerre m_1/m_0 for
    alpha = a - 1 on the numeric path.
    """
    a = Fraction(a)
    if a.denominator == 1:
        raise ValueError(f"I-ratio check needs non-integer a, got {a}")
    if a <= 0:
        raise ValueError(f"I-ratio check needs a > 0, got {a}")
    checker = QuadratureChecker(WeightFamily.q_laguerre(a - 1), ctx, precision, tolerance_exponent)
    numerator = checker.integrator.integrate(lambda y: y)
    with mp.workprec(precision + config.GUARD_BITS):
        value = numerator.value / checker.mass.value
        target = mp.power(to_mpf(ctx.q), -to_mpf(a)) - 1
    return checker._compare(f"I({a}+1)/I({a})", value, target, [numerator, checker.mass])
