"""
Logging utilities.
"""
from loguru import logger
from pathlib import Path
from typing import Optional, Union
import sys

from config import config

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<magenta>{extra[run]}</magenta> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {extra[run]} | {name}:{function}:{line} - {message}"


def resolve_log_file(log_file: Union[str, Path], logs_dir: Optional[Path] = None) -> Path:
    """A bare file name lands in logs_dir (LOGS_DIR by default); a path with a directory is kept."""
    path = Path(log_file)
    if path.is_absolute() or path.parent != Path("."):
        return path
    return (logs_dir or config.LOGS_DIR) / path


def setup_logger(log_level: str = "INFO", log_file: Optional[Path] = None, run_label: str = "-"):
    """
    Setup logger configuration.

    stdout carries reports (json/csv must stay parseable), so every sink
    here is stderr or a file. Each line is tagged with the run label,
    e.g. "qlaguerre alpha=1 sqrt-q=1/2".

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional path to log file; a bare name is placed under LOGS_DIR
        run_label: Parameter point shown on every line
    """
    logger.remove()
    logger.configure(extra={"run": run_label})

    logger.add(sys.stderr, level=log_level, format=CONSOLE_FORMAT)

    if log_file:
        log_path = resolve_log_file(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        logger.add(
            log_path,
            level=log_level,
            format=FILE_FORMAT,
            rotation="10 MB",
            retention="1 week",
        )

    return logger
