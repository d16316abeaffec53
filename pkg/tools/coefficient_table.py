"""
Coefficient Table Tool (系数表工具)

Publishes the closed-form recurrence coefficients and residue data for
n <= nmax as exact rationals.
"""
from loguru import logger

from closed_forms import closed_table, residues_closed
from evaluation.report import ReportSummary
from utils.validators import RunConfig
from .base_tool import BaseTool, ToolResult

# zeta is zeta_n/zeta_0; p1 is the subleading coefficient of P_n
TABLE_COLUMNS = ("n", "alpha", "beta", "zeta", "p1", "R", "r", "S")


class CoefficientTableTool(BaseTool):
    """系数表工具 - alpha_n, beta_n, zeta_n/zeta_0, p1(n), R_n, r_n, S_n from the explicit formulas."""

    name = "table"
    description = "Closed-form recurrence coefficients and residue data, exact"

    def run(self, run_config: RunConfig) -> ToolResult:
        family = run_config.weight_family
        ctx = run_config.ctx
        N = run_config.nmax
        ctx.precompute(8 * N + 16)

        table = closed_table(family, ctx, N)
        residues = residues_closed(family, ctx, N)
        values = {
            "alpha": table.alpha,
            "beta": table.beta,
            "zeta": table.zeta_ratio,
            "p1": table.p1,
            "R": residues.R,
            "r": residues.r,
            "S": [residues.S(n) for n in range(N + 1)],
        }
        rows = [
            {column: n if column == "n" else str(values[column][n]) for column in TABLE_COLUMNS}
            for n in range(N + 1)
        ]
        logger.info(f"table: {len(rows)} rows for {family}")
        return ToolResult(
            command=self.name,
            config=run_config.summary_fields(),
            rows=rows,
            summary=ReportSummary(total=len(rows), passed=len(rows), failed=0, expected_failures=0),
        )
