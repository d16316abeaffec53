"""
Base Tool class for the CLI commands.

每个命令都是一个工具：参数由 RunConfig 校验，结果统一为 ToolResult。
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from loguru import logger
from pydantic import BaseModel

from evaluation.report import ReportSummary
from utils.validators import RunConfig


class ToolResult(BaseModel):
    """
    Output of one command.

    Exactly one of rows (tables) and entries (reports) is set; `payload`
    is the json document {config, rows|entries, summary}.
    """

    command: str
    config: Dict[str, Any]
    rows: Optional[List[Dict[str, Any]]] = None
    entries: Optional[List[Dict[str, Any]]] = None
    summary: ReportSummary

    @property
    def records(self) -> List[Dict[str, Any]]:
        return self.rows if self.rows is not None else (self.entries or [])

    @property
    def records_key(self) -> str:
        return "rows" if self.rows is not None else "entries"

    @property
    def exit_code(self) -> int:
        return 0 if self.summary.success else 1

    def payload(self) -> Dict[str, Any]:
        return {
            "config": self.config,
            self.records_key: self.records,
            "summary": self.summary.model_dump(mode="json"),
        }


class BaseTool(ABC):
    """
    工具基类。

    子类需要：
    1. 定义 name 和 description
    2. 实现 run() 方法，返回 ToolResult
    """

    name: str = ""
    description: str = ""
    args_schema: type[BaseModel] = RunConfig

    def __init__(self):
        if not self.name:
            self.name = self.__class__.__name__.replace("Tool", "").lower()
        if not self.description:
            self.description = self.__class__.__doc__ or "No description"

    @abstractmethod
    def run(self, run_config: RunConfig) -> ToolResult:
        """
        Execute the command.

        Args:
            run_config: validated parameters

        Returns:
            ToolResult
        """

    def __call__(self, **kwargs) -> ToolResult:
        """Validate keyword arguments against args_schema, then run."""
        run_config = self.args_schema(command=self.name, **kwargs)
        logger.info(f"{self.name}: {run_config.run_label}")
        return self.run(run_config)
