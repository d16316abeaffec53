"""CLI commands as tools, plus the report renderer."""
from .base_tool import BaseTool, ToolResult
from .coefficient_table import CoefficientTableTool
from .identity_verifier import IdentityVerifierTool
from .quadrature_checker import QuadratureCheckerTool
from .oracle_comparison import OracleComparisonTool
from .report_generator import ReportGenerator

TOOLS = {
    tool.name: tool
    for tool in (
        CoefficientTableTool,
        IdentityVerifierTool,
        QuadratureCheckerTool,
        OracleComparisonTool,
    )
}

__all__ = [
    "BaseTool",
    "ToolResult",
    "CoefficientTableTool",
    "IdentityVerifierTool",
    "QuadratureCheckerTool",
    "OracleComparisonTool",
    "ReportGenerator",
    "TOOLS",
]
