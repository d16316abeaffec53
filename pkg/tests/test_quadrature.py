"""
Tests for the high-precision quadrature layer (128 bits unless a
threshold is quoted at 256).
"""
from fractions import Fraction

import pytest
from mpmath import mp

from algebra import Polynomial, RationalFunction
from families import WeightFamily, qshift_weight_factor, weight_eval_numeric
from quadrature import (
    HalfLineIntegrator,
    IntegrabilityError,
    QuadratureChecker,
    check_I_ratio,
    integrate_halfline,
    mp_polynomial,
    mp_rational,
)

PRECISION = 128


@pytest.fixture
def sw_checker(sw, ctx_half):
    return QuadratureChecker(sw, ctx_half, precision=PRECISION)


@pytest.fixture
def qlag_checker(qlag1, ctx_half):
    return QuadratureChecker(qlag1, ctx_half, precision=PRECISION)


class TestIntegrateHalfline:
    """Tests for integrate_halfline and HalfLineIntegrator."""

    def test_exponential(self):
        """int_0^inf e^{-x} dx = 1."""
        result = integrate_halfline(lambda x: mp.exp(-x), PRECISION)
        assert result.converged
        with mp.workprec(PRECISION):
            assert abs(result.value - 1) < mp.mpf(10) ** -30
        assert result.evaluations > 0

    def test_precision_floor(self):
        """Precision below the floor is refused."""
        with pytest.raises(ValueError):
            integrate_halfline(lambda x: mp.exp(-x), 32)

    def test_breakpoints_cover_tail(self, sw, ctx_half):
        """The t-axis starts at -inf and is cut at a finite t_max."""
        integrator = HalfLineIntegrator(sw, ctx_half, PRECISION)
        assert integrator.points[0] == mp.ninf
        assert integrator.points[-1] > 0
        assert len(integrator.points) > 3

    def test_mp_polynomial(self):
        """Numeric Horner evaluation matches exact evaluation."""
        p = Polynomial((1024, -160, 1))
        with mp.workprec(PRECISION):
            assert mp_polynomial(p)(mp.mpf(3)) == p(Fraction(3))

    def test_mp_polynomial_follows_precision(self):
        """Coefficients are re-rounded when the working precision changes."""
        evaluate = mp_polynomial(Polynomial((Fraction(1, 3),)))
        with mp.workprec(64):
            low = evaluate(mp.one)
        with mp.workprec(PRECISION):
            high = evaluate(mp.one)
            assert abs(high - mp.one / 3) < mp.mpf(2) ** -(PRECISION - 2)
        assert low != high

    def test_mp_rational(self):
        """Numeric rational function evaluation."""
        f = mp_rational(RationalFunction(Polynomial.constant(1), Polynomial.linear(-1)))
        with mp.workprec(PRECISION):
            assert f(mp.mpf(3)) == mp.mpf(1) / 4

    def test_node_cache_is_bounded(self, qlag1, ctx_half):
        """The per-node cache never grows past its size and clear() empties it."""
        integrator = HalfLineIntegrator(qlag1, ctx_half, PRECISION, cache_size=64)
        integrator.integrate(lambda x: mp.one)
        assert integrator.cache_info().currsize <= 64
        integrator.clear()
        assert integrator.cache_info().currsize == 0

    @pytest.mark.parametrize("family_name", ["sw", "qlag1", "qlag2"])
    def test_qshift_weight_factor(self, family_name, ctx_half, request):
        """w(x/q) from the functional equation matches direct evaluation."""
        family = request.getfixturevalue(family_name)
        factor = qshift_weight_factor(family, ctx_half, PRECISION)
        with mp.workprec(PRECISION):
            for x in (mp.mpf(1) / 3, mp.mpf(2), mp.mpf(40)):
                direct = weight_eval_numeric(family, ctx_half, x * 4, PRECISION)
                derived = weight_eval_numeric(family, ctx_half, x, PRECISION) * factor(x)
                assert abs(direct - derived) <= abs(direct) * mp.mpf(10) ** -30


class TestQuadratureChecker:
    """Tests for QuadratureChecker."""

    def test_sw_total_mass(self, sw_checker):
        """int w matches the Gaussian closed form."""
        assert sw_checker.check_total_mass().passed

    def test_total_mass_needs_sw(self, qlag_checker):
        """The Gaussian closed form is SW only."""
        with pytest.raises(ValueError):
            qlag_checker.check_total_mass()

    @pytest.mark.parametrize("k", [-1, 1, 2])
    def test_moment_ratios(self, qlag_checker, k):
        """Numeric m_k/m_0 agrees with the exact ratio."""
        check = qlag_checker.check_moment_ratio(k)
        assert check.passed, check

    def test_orthogonality(self, sw_checker):
        """Off-diagonal vanishes, diagonal is zeta_n/zeta_0."""
        off = sw_checker.check_orthogonality(1, 2)
        diag = sw_checker.check_orthogonality(2, 2)
        assert off.mode == "absolute"
        assert off.passed, off
        assert diag.target == "11796480"
        assert diag.passed, diag

    def test_u_moment_identities(self, sw_checker):
        """(1.15) vanishes and (1.16) gives q at n = 0."""
        vanishing, ratio = sw_checker.check_u_moment_identities(0)
        assert vanishing.passed, vanishing
        assert ratio.label == "(1.16) n=0"
        assert ratio.target == "1/4"
        assert ratio.passed, ratio

    @pytest.mark.parametrize("x0", [Fraction(1, 2), Fraction(3)])
    def test_ladder_integral_definitions(self, qlag_checker, x0):
        """A_1(x0) and B_1(x0) from their integrals match the closed forms."""
        checks = qlag_checker.check_ladder_integral_defs(1, x0)
        assert len(checks) == 2
        assert all(c.passed for c in checks), checks

    def test_ladder_integral_rejects_non_positive_point(self, sw_checker):
        """x0 must be positive."""
        with pytest.raises(ValueError):
            sw_checker.check_ladder_integral_defs(0, 0)

    def test_index_range(self, sw_checker):
        """Quadrature checks stop at n = 4."""
        with pytest.raises(ValueError):
            sw_checker.check_qshift_norm(5)

    def test_qshift_norm(self, qlag_checker):
        """int P_1(y) P_1(y/q) w / (zeta_1 int w) = 1/q."""
        check = qlag_checker.check_qshift_norm(1)
        assert check.target == "4"
        assert check.passed, check

    def test_residue_integral(self, qlag_checker):
        """R_0 from its defining integral is 1/(1-q)."""
        check = qlag_checker.check_residue_integral(0)
        assert check.target == "4/3"
        assert check.passed, check


class TestIntegrationByParts:
    """Tests for the integration-by-parts lemma."""

    def test_sw(self, sw_checker):
        """Holds for polynomial f, g under the SW weight."""
        check = sw_checker.check_integration_by_parts(Polynomial((1, 1)), Polynomial.monomial(2))
        assert check.passed, check

    def test_qlaguerre(self, qlag_checker):
        """Holds for alpha = 1 with f, g not vanishing at 0."""
        check = qlag_checker.check_integration_by_parts(Polynomial((2, 1)), Polynomial((1, -1)))
        assert check.passed, check

    def test_sw_worked_pairs(self, sw_checker):
        """(1, x) and (P_1, P_2) under the SW weight."""
        one_x = sw_checker.check_integration_by_parts(Polynomial.constant(1), Polynomial.x())
        p1_p2 = sw_checker.check_integration_by_parts(sw_checker.basis[1], sw_checker.basis[2])
        assert one_x.passed, one_x
        assert p1_p2.passed, p1_p2
        assert p1_p2.label == "(1.14) f=(x - 8)w g=x^2 - 160*x + 1024"

    def test_qlaguerre_worked_pair(self, qlag_checker):
        """(1, x^2) under the q-Laguerre weight with alpha = 1."""
        check = qlag_checker.check_integration_by_parts(Polynomial.constant(1), Polynomial.monomial(2))
        assert check.passed, check

    def test_default_pairs_include_worked_pairs(self, sw_checker, qlag_checker):
        """The suite runs the worked pairs first, then three pairs with f(0) = 0."""
        sw_pairs = sw_checker.integration_pairs()
        assert sw_pairs[0] == (Polynomial.constant(1), Polynomial.x())
        assert sw_pairs[1] == (Polynomial((-8, 1)), Polynomial((1024, -160, 1)))
        assert qlag_checker.integration_pairs()[0] == (Polynomial.constant(1), Polynomial.monomial(2))
        assert all(f(0) == 0 for f, _ in sw_pairs[2:])

    def test_hypothesis_violated(self, ctx_half):
        """alpha = 0 with f(0), g(0) != 0 is rejected before integrating."""
        checker = QuadratureChecker(WeightFamily.q_laguerre(0), ctx_half, precision=PRECISION)
        with pytest.raises(IntegrabilityError):
            checker.check_integration_by_parts(Polynomial((1, 1)), Polynomial((1,)))

    def test_run_all_rejects_bad_pair_up_front(self, ctx_half):
        """run_all validates every pair before the first integral."""
        checker = QuadratureChecker(WeightFamily.q_laguerre(0), ctx_half, precision=PRECISION)
        with pytest.raises(IntegrabilityError, match="dx/x finite at 0"):
            checker.run_all(0, pairs=[(Polynomial.x(), Polynomial.x()), (Polynomial.constant(1), Polynomial.constant(1))])
        info = checker.integrator.cache_info()
        assert info.hits + info.misses == 0


class TestIRatio:
    """Tests for the non-integer I-ratio check."""

    def test_half(self, ctx_half):
        """a = 1/2: the ratio is q^{-1/2} - 1 = 1."""
        check = check_I_ratio(ctx_half, Fraction(1, 2), PRECISION)
        assert check.passed, check

    @pytest.mark.parametrize("a", [Fraction(1), Fraction(-1, 2)])
    def test_rejects(self, ctx_half, a):
        """Integer and non-positive exponents are refused."""
        with pytest.raises(ValueError):
            check_I_ratio(ctx_half, a, PRECISION)
