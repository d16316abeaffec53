"""
Oracle Comparison Tool (矩方法对照工具)

Side-by-side alpha_n, beta_n from the Chebyshev algorithm on moments and
from the explicit formulas, with an exact-equality flag per row.
"""
from fractions import Fraction
from typing import Callable, Optional, Tuple

from loguru import logger

from algebra import QContext
from closed_forms import recurrence_closed
from evaluation.report import ReportSummary
from families import MomentLadder, WeightFamily
from oracle import chebyshev_recurrence
from utils.validators import RunConfig
from .base_tool import BaseTool, ToolResult

ClosedForm = Callable[[WeightFamily, QContext, int], Tuple[Fraction, Fraction]]


class OracleComparisonTool(BaseTool):
    """
    矩方法对照工具。

    The closed-form function is injectable so a deliberately wrong formula
    can exercise the mismatch path.
    """

    name = "oracle"
    description = "Moment oracle against the closed-form recurrence coefficients"

    def __init__(self, closed_form: Optional[ClosedForm] = None):
        super().__init__()
        self.closed_form = closed_form or recurrence_closed

    def run(self, run_config: RunConfig) -> ToolResult:
        family = run_config.weight_family
        ctx = run_config.ctx
        N = run_config.nmax
        table = chebyshev_recurrence(MomentLadder(family, ctx.precompute(8 * N + 16)), N)

        rows = []
        for n in range(N + 1):
            alpha_closed, beta_closed = self.closed_form(family, ctx, n)
            equal = table.alpha[n] == alpha_closed and table.beta[n] == beta_closed
            if not equal:
                logger.warning(
                    f"oracle mismatch n={n}: alpha {table.alpha[n]} vs {alpha_closed}, "
                    f"beta {table.beta[n]} vs {beta_closed}"
                )
            rows.append(
                {
                    "n": n,
                    "alpha_oracle": str(table.alpha[n]),
                    "alpha_closed": str(alpha_closed),
                    "beta_oracle": str(table.beta[n]),
                    "beta_closed": str(beta_closed),
                    "equal": equal,
                }
            )
        matched = sum(1 for row in rows if row["equal"])
        logger.info(f"oracle: {matched}/{len(rows)} rows equal")
        return ToolResult(
            command=self.name,
            config=run_config.summary_fields(),
            rows=rows,
            summary=ReportSummary(
                total=len(rows), passed=matched, failed=len(rows) - matched, expected_failures=0
            ),
        )
