"""Utility functions package."""
from .logger import resolve_log_file, setup_logger
from .validators import RunConfig, validate_run_config

__all__ = ["resolve_log_file", "setup_logger", "RunConfig", "validate_run_config"]
