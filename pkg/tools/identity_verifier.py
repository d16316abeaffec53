"""
Identity Verifier Tool (恒等式验证工具)

Runs the exact suite: every ladder, supplementary, residue-system and
closed-form identity for n <= nmax, each entry labeled with its equation.
"""
from loguru import logger

from evaluation import LadderVerifier
from utils.validators import RunConfig
from .base_tool import BaseTool, ToolResult


class IdentityVerifierTool(BaseTool):
    """恒等式验证工具 - exact verification against the moment oracle."""

    name = "verify"
    description = "Exact verification of every identity for n <= nmax"

    def run(self, run_config: RunConfig) -> ToolResult:
        report = LadderVerifier(run_config.weight_family, run_config.ctx, run_config.nmax).run_suite()
        summary = report.summary
        for entry in report.unexpected():
            logger.warning(f"unexpected outcome: {entry.label}: {entry.status}")
        logger.info(
            f"verify: {summary.passed} passed, {summary.failed} unexpected, "
            f"{summary.expected_failures} documented discrepancies"
        )
        entries = [
            {**entry.model_dump(mode="json"), "status": entry.status} for entry in report.entries
        ]
        return ToolResult(
            command=self.name,
            config=run_config.summary_fields(),
            entries=entries,
            summary=summary,
        )
