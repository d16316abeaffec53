"""
Quadrature Checker Tool (数值积分校验工具)

High-precision tanh-sinh checks of the integral definitions for
n <= min(nmax, 4).
"""
from loguru import logger

from evaluation.report import summarize_numeric
from quadrature import QuadratureChecker
from utils.validators import RunConfig
from .base_tool import BaseTool, ToolResult


class QuadratureCheckerTool(BaseTool):
    """数值积分校验工具 - integral definitions against exact targets."""

    name = "quadcheck"
    description = "Numeric checks of orthogonality, u-moments and ladder integrals"

    def run(self, run_config: RunConfig) -> ToolResult:
        checker = QuadratureChecker(
            run_config.weight_family,
            run_config.ctx,
            precision=run_config.precision,
            tolerance_exponent=run_config.tolerance,
        )
        checks = checker.run_all(run_config.nmax)
        summary = summarize_numeric(checks)
        logger.info(f"quadcheck: {summary.passed}/{summary.total} within tolerance")
        rows = [{**check.model_dump(mode="json"), "status": check.status} for check in checks]
        return ToolResult(
            command=self.name,
            config=run_config.summary_fields(),
            rows=rows,
            summary=summary,
        )
