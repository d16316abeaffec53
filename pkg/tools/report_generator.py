"""
Report Generator (报告生成)

Renders a ToolResult as json, csv or text. json and csv are byte-stable
for identical inputs; text goes through the jinja2 templates in
templates/.
"""
import csv
import io
import json
from pathlib import Path
from typing import Optional

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from loguru import logger

from config import config
from .base_tool import ToolResult


class ReportGenerator:
    """
    报告生成器。

    One template per command: templates/<command>.txt.j2.
    """

    def __init__(self, template_dir: Optional[Path] = None):
        self.template_dir = Path(template_dir or config.TEMPLATES_DIR)
        self.environment = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render(self, result: ToolResult, output_format: str) -> str:
        if output_format == "json":
            return self.to_json(result)
        if output_format == "csv":
            return self.to_csv(result)
        if output_format == "text":
            return self.to_text(result)
        raise ValueError(f"unknown output format {output_format!r}")

    @staticmethod
    def to_json(result: ToolResult) -> str:
        return json.dumps(result.payload(), indent=2) + "\n"

    @staticmethod
    def to_csv(result: ToolResult) -> str:
        """One line per row/entry; the header is the record's key order."""
        records = result.records
        buffer = io.StringIO()
        if not records:
            return ""
        writer = csv.DictWriter(buffer, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buffer.getvalue()

    def to_text(self, result: ToolResult) -> str:
        template = self.environment.get_template(f"{result.command}.txt.j2")
        return template.render(
            config=result.config,
            records=result.records,
            summary=result.summary,
        )

    def save(self, result: ToolResult, output_format: str, path: Path) -> Path:
        """Write the rendered report; text format falls back to json for files."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        file_format = output_format if output_format in ("json", "csv") else "json"
        path.write_text(self.render(result, file_format), encoding="utf-8")
        logger.info(f"{file_format} report saved to {path}")
        return path
