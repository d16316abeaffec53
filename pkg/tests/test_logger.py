"""
Tests for the logging setup.
"""
from pathlib import Path

import pytest
from loguru import logger

from config import config
from utils import resolve_log_file, setup_logger


@pytest.fixture(autouse=True)
def release_log_sinks():
    yield
    logger.remove()


class TestResolveLogFile:
    """Tests for resolve_log_file."""

    def test_bare_name_goes_to_logs_dir(self):
        """LOG_FILE=qladder.log is written under LOGS_DIR."""
        assert resolve_log_file("qladder.log") == config.LOGS_DIR / "qladder.log"

    def test_explicit_directory_kept(self, tmp_path):
        """Relative and absolute paths with a directory are left alone."""
        assert resolve_log_file("out/run.log") == Path("out/run.log")
        assert resolve_log_file(tmp_path / "run.log") == tmp_path / "run.log"


class TestSetupLogger:
    """Tests for setup_logger."""

    def test_file_sink_in_logs_dir(self, tmp_path, monkeypatch):
        """A bare log file name is created inside the logs directory, tagged with the run label."""
        monkeypatch.setattr(config, "LOGS_DIR", tmp_path / "logs")
        setup_logger(log_level="INFO", log_file="qladder.log", run_label="sw sqrt-q=1/2")
        logger.info("table rows=3")
        logger.remove()
        text = (tmp_path / "logs" / "qladder.log").read_text(encoding="utf-8")
        assert "sw sqrt-q=1/2" in text
        assert "table rows=3" in text
