"""
Unit tests for the moment oracle.
"""
from fractions import Fraction

import pytest

from algebra import Polynomial
from families import MomentLadder, WeightFamily
from oracle import (
    MomentSequenceError,
    RecurrenceTable,
    bareiss_determinant,
    cd_identity_check,
    chebyshev_recurrence,
    generate_monic,
    hankel_beta,
    moment_pairing,
    p1_of,
    zeta_ratio,
)


class _BrokenMoments:
    """Moment ratios of no positive measure: m_2 < m_1^2."""

    family = "broken"
    ctx = "q=?"

    def ratio(self, k):
        return [Fraction(1), Fraction(2), Fraction(3), Fraction(5)][k]


class TestChebyshevRecurrence:
    """Tests for chebyshev_recurrence."""

    def test_sw_coefficients(self, sw, ctx_half):
        """SW q=1/4: alpha_0=8, alpha_1=152, beta_1=192, beta_2=61440."""
        table = chebyshev_recurrence(MomentLadder(sw, ctx_half), 2)
        assert table.alpha[:2] == (8, 152)
        assert table.beta == (0, 192, 61440)
        assert table.source == "oracle"

    def test_qlaguerre_coefficients(self, qlag1, ctx_half):
        """qLag alpha=1 q=1/4: alpha = 15, 300, 5040; beta_1=720, beta_2=241920."""
        table = chebyshev_recurrence(MomentLadder(qlag1, ctx_half), 2)
        assert table.alpha == (15, 300, 5040)
        assert table.beta[1:] == (720, 241920)

    def test_derived_columns(self, qlag1, ctx_half):
        """zeta ratios are products of betas; p1 is minus the partial sums of alpha."""
        table = chebyshev_recurrence(MomentLadder(qlag1, ctx_half), 2)
        assert table.zeta_ratio == (1, 720, 720 * 241920)
        assert table.p1[:3] == (0, -15, -315)
        assert zeta_ratio(table, 2) == 720 * 241920

    def test_non_positive_definite(self):
        """A moment sequence without a measure is rejected."""
        with pytest.raises(MomentSequenceError):
            chebyshev_recurrence(_BrokenMoments(), 1)

    def test_from_coefficients_length_mismatch(self):
        """alpha and beta must cover the same indices."""
        with pytest.raises(ValueError):
            RecurrenceTable.from_coefficients([Fraction(1)], [Fraction(0), Fraction(1)], "closed")


class TestHankel:
    """Tests for the Hankel determinant spot check."""

    def test_bareiss(self):
        """Small determinants, with and without a zero pivot."""
        assert bareiss_determinant([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]) == 5
        assert bareiss_determinant([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == -1
        assert bareiss_determinant([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_hankel_beta_matches_chebyshev(self, sw, ctx_half, n):
        """beta_n from Hankel determinants equals the Chebyshev value."""
        moments = MomentLadder(sw, ctx_half)
        table = chebyshev_recurrence(moments, 3)
        assert hankel_beta(moments, n) == table.beta[n]


class TestOrthoBasis:
    """Tests for the monic basis and the moment functional."""

    def test_sw_p2(self, sw, ctx_half):
        """P_2 = x^2 - 160 x + 1024 for SW q=1/4."""
        basis = generate_monic(chebyshev_recurrence(MomentLadder(sw, ctx_half), 2), 2)
        assert basis[1] == Polynomial((-8, 1))
        assert basis[2] == Polynomial((1024, -160, 1))
        assert p1_of(basis, 2) == -160
        assert len(basis) == 3

    @pytest.mark.parametrize("family_name", ["sw", "qlag1", "qlag2"])
    def test_orthogonality(self, family_name, ctx_two_thirds, request):
        """L(P_m P_n) = 0 for m != n and zeta_n/zeta_0 on the diagonal."""
        family = request.getfixturevalue(family_name)
        moments = MomentLadder(family, ctx_two_thirds)
        table = chebyshev_recurrence(moments, 4)
        basis = generate_monic(table, 4)
        for n in range(5):
            for m in range(n):
                assert moment_pairing(moments, basis[m], basis[n]) == 0
            assert moment_pairing(moments, basis[n], basis[n]) == table.zeta_ratio[n]

    def test_qshift_pairing(self, qlag1, ctx_half):
        """L(P_j(y) P_j(y/q)) = q^{-j} zeta_j/zeta_0."""
        moments = MomentLadder(qlag1, ctx_half)
        table = chebyshev_recurrence(moments, 3)
        basis = generate_monic(table, 3)
        for j in range(4):
            shifted = basis[j].dilate(1 / ctx_half.q)
            assert moment_pairing(moments, basis[j], shifted) == ctx_half.qpow(-j) * table.zeta_ratio[j]

    def test_christoffel_darboux(self, parameter_point):
        """The Christoffel-Darboux identity holds exactly for 1 <= n <= 10."""
        family, ctx = parameter_point
        table = chebyshev_recurrence(MomentLadder(family, ctx), 10)
        basis = generate_monic(table, 10)
        assert all(cd_identity_check(basis, table, n) for n in range(1, 11))

    def test_christoffel_darboux_detects_tampering(self, sw, ctx_half):
        """A wrong beta breaks the identity."""
        table = chebyshev_recurrence(MomentLadder(sw, ctx_half), 3)
        basis = generate_monic(table, 3)
        tampered = RecurrenceTable.from_coefficients(
            list(table.alpha), [table.beta[0], table.beta[1] + 1] + list(table.beta[2:]), "closed"
        )
        assert not cd_identity_check(basis, tampered, 2)


class TestNumericOnlyFamilies:
    """Families off the exact path."""

    def test_non_integer_alpha_has_no_exact_moments(self, ctx_half):
        """Moment ratios need q^-alpha rational."""
        with pytest.raises(ValueError):
            chebyshev_recurrence(MomentLadder(WeightFamily.q_laguerre(Fraction(1, 2)), ctx_half), 1)
