"""
Unit tests for the first-order recurrence solver.
"""
from fractions import Fraction

import pytest

from closed_forms import p1_closed, recurrence_closed, residues_closed
from solver import (
    FirstOrderRecurrence,
    qlaguerre_beta_recurrence,
    qlaguerre_printed_R_recurrence,
    qlaguerre_r_recurrence,
    qlaguerre_scaled_p1_recurrence,
    solve_forward,
    sw_R_recurrence,
    sw_r_recurrence,
    telescope_sum,
    unscale_p1,
    verify_solution,
)


class TestFirstOrderRecurrence:
    """Tests for the generic solver."""

    def test_solve_forward(self):
        """x_{n+1} = 2 x_n + 1 from x_0 = 0."""
        rec = FirstOrderRecurrence(lambda n: (Fraction(2), Fraction(1)), Fraction(0), "doubling")
        assert solve_forward(rec, 4) == [0, 1, 3, 7, 15]

    def test_zero_coefficient(self):
        """a_n = 0 is not forward solvable."""
        rec = FirstOrderRecurrence(lambda n: (Fraction(0), Fraction(1)), Fraction(0), "degenerate")
        with pytest.raises(ZeroDivisionError):
            solve_forward(rec, 1)

    def test_verify_solution_flags_bad_index(self):
        """A wrong value is reported at its index only."""
        rec = FirstOrderRecurrence(lambda n: (Fraction(1), Fraction(1)), Fraction(0), "counting")
        checks = verify_solution(rec, [Fraction(0), Fraction(1), Fraction(5)], 2)
        assert [c.held for c in checks] == [True, True, False]
        assert checks[2].expected == 2

    def test_verify_solution_needs_enough_terms(self):
        """The candidate must cover every index checked."""
        rec = FirstOrderRecurrence(lambda n: (Fraction(1), Fraction(1)), Fraction(0), "counting")
        with pytest.raises(ValueError):
            verify_solution(rec, [Fraction(0)], 2)

    def test_telescope_sum(self):
        """sum_{j<n}."""
        assert telescope_sum([Fraction(1), Fraction(2), Fraction(3)], 2) == 3
        assert telescope_sum([], 0) == 0
        with pytest.raises(ValueError):
            telescope_sum([Fraction(1)], 2)


class TestStieltjesWigertEquations:
    """The SW integrating-factor equations."""

    def test_R_solution(self, ctx_half):
        """Solving for R_n reproduces q^n/(1-q)."""
        assert solve_forward(sw_R_recurrence(ctx_half), 3) == [
            Fraction(4, 3), Fraction(1, 3), Fraction(1, 12), Fraction(1, 48)
        ]

    def test_r_solution(self, ctx_half):
        """Solving for r_n reproduces (1 - q^{-n})/((1-q) sqrt q)."""
        assert solve_forward(sw_r_recurrence(ctx_half), 2) == [0, -8, -40]

    def test_labels_keep_equation_tag(self, ctx_half):
        """Labels start with the source equation."""
        assert sw_R_recurrence(ctx_half).label.startswith("(3.6)")
        assert sw_r_recurrence(ctx_half).label.startswith("(3.9)")


class TestQLaguerreEquations:
    """The q-Laguerre integrating-factor equations."""

    def test_r_solution(self, qlag1, ctx_half):
        """r = 0, -16, -80, -336."""
        alphas = [recurrence_closed(qlag1, ctx_half, n)[0] for n in range(3)]
        assert solve_forward(qlaguerre_r_recurrence(ctx_half, alphas), 3) == [0, -16, -80, -336]

    def test_scaled_p1(self, qlag1, ctx_half):
        """The scaled p1 recurrence solves to the closed form."""
        scaled = solve_forward(qlaguerre_scaled_p1_recurrence(ctx_half, qlag1), 4)
        assert unscale_p1(ctx_half, scaled) == [p1_closed(qlag1, ctx_half, n) for n in range(5)]

    def test_beta_solution(self, qlag1, ctx_half):
        """The beta recurrence solves to the closed form."""
        alphas = [recurrence_closed(qlag1, ctx_half, n)[0] for n in range(4)]
        solved = solve_forward(qlaguerre_beta_recurrence(ctx_half, qlag1, alphas), 3)
        assert solved == [recurrence_closed(qlag1, ctx_half, n)[1] for n in range(4)]

    def test_printed_R_equation_diverges(self, ctx_half):
        """The R-only equation gives R_1 = 7/3, not the residue-system 1/3."""
        solved = solve_forward(qlaguerre_printed_R_recurrence(ctx_half), 1)
        assert solved == [Fraction(4, 3), Fraction(7, 3)]


class TestSolutionsAgainstClosedForms:
    """Forward solutions agree with the closed forms for n <= 12."""

    N = 12

    def test_residue_recurrences(self, parameter_point):
        """R_n (SW) and r_n (both families) solve their recurrences."""
        family, ctx = parameter_point
        residues = residues_closed(family, ctx, self.N)
        if family.is_sw:
            assert all(step.held for step in verify_solution(sw_R_recurrence(ctx), residues.R, self.N))
            assert all(step.held for step in verify_solution(sw_r_recurrence(ctx), residues.r, self.N))
        else:
            alphas = [recurrence_closed(family, ctx, n)[0] for n in range(self.N + 1)]
            solved = solve_forward(qlaguerre_r_recurrence(ctx, alphas), self.N)
            assert solved == list(residues.r[: self.N + 1])

    def test_qlaguerre_p1_and_beta(self, parameter_point):
        """p1(n) and beta_n from the integrating-factor equations."""
        family, ctx = parameter_point
        if family.is_sw:
            pytest.skip("q-Laguerre equations")
        closed = [recurrence_closed(family, ctx, n) for n in range(self.N + 1)]
        p1 = unscale_p1(ctx, solve_forward(qlaguerre_scaled_p1_recurrence(ctx, family), self.N))
        assert p1 == [p1_closed(family, ctx, n) for n in range(self.N + 1)]
        beta = solve_forward(qlaguerre_beta_recurrence(ctx, family, [a for a, _ in closed]), self.N)
        assert beta == [b for _, b in closed]
