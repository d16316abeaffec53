"""
Main entry point for the q-ladder toolkit.

    python main.py table     --family sw --sqrt-q 1/2 --nmax 2
    python main.py verify    --family qlaguerre --alpha 1 --sqrt-q 1/2 --nmax 8
    python main.py quadcheck --family sw --sqrt-q 1/2 --precision 256
    python main.py oracle    --family sw --sqrt-q 1/2 --nmax 12

Exit codes: 0 success, 1 unexpected identity outcome / numeric breach /
oracle mismatch, 2 invalid parameters. Reports go to stdout, logs to
stderr.
"""
import argparse
import sys
from typing import Any, Dict, List, Optional

from loguru import logger

from config import config
from tools import TOOLS, ReportGenerator
from utils import RunConfig, setup_logger, validate_run_config

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

DEFAULT_NMAX = {
    "table": config.DEFAULT_NMAX,
    "verify": config.TOOL_CONFIG["verify"]["default_nmax"],
    "quadcheck": config.QUADCHECK_MAX_N,
    "oracle": config.DEFAULT_NMAX,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Exact ladder-operator verification for Stieltjes-Wigert and q-Laguerre weights",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, tool in TOOLS.items():
        sub = subparsers.add_parser(name, help=tool.description)
        sub.add_argument("--family", required=True, choices=["sw", "qlaguerre"])
        sub.add_argument("--sqrt-q", required=True, dest="sqrt_q", help="exact rational p/r in (0,1)")
        # integer alpha only here; non-integer alpha runs through the library
        # numeric path (QuadratureChecker, check_I_ratio), not the CLI
        sub.add_argument("--alpha", type=int, default=None, help="q-Laguerre parameter")
        sub.add_argument("--nmax", type=int, default=DEFAULT_NMAX[name])
        sub.add_argument("--precision", type=int, default=config.DEFAULT_PRECISION_BITS, help="bits")
        sub.add_argument(
            "--tolerance",
            type=int,
            default=config.DEFAULT_TOLERANCE_EXPONENT,
            help="relative tolerance exponent k (1e-k)",
        )
        sub.add_argument(
            "--format",
            choices=["json", "csv", "text"],
            default=config.TOOL_CONFIG[name]["output_format"],
        )
        sub.add_argument("--out", default=None, help="also write the json/csv report to this path")
        sub.add_argument("--log-level", dest="log_level", default=config.LOG_LEVEL)
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> Dict[str, Any]:
    """argparse namespace as a RunConfig-shaped dict; SystemExit on usage errors."""
    return vars(build_parser().parse_args(argv))


def run_command(run_config: RunConfig, tool=None) -> int:
    """
    Run one validated command and emit its report.

    Args:
        run_config: validated parameters
        tool: tool instance to use instead of the registered one

    Returns:
        exit code
    """
    tool = tool or TOOLS[run_config.command]()
    try:
        result = tool.run(run_config)
    except ValueError as exc:
        logger.error(f"{run_config.command}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    generator = ReportGenerator()
    sys.stdout.write(generator.render(result, run_config.format))
    if run_config.out:
        generator.save(result, run_config.format, run_config.out)
    if result.exit_code != EXIT_OK:
        logger.warning(f"{run_config.command}: {result.summary.failed} unexpected outcome(s)")
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    try:
        raw = parse_arguments(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    is_valid, errors = validate_run_config(raw)
    if not is_valid:
        for error in errors:
            print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE

    run_config = RunConfig(**raw)
    setup_logger(
        log_level=run_config.log_level,
        log_file=config.LOG_FILE,
        run_label=run_config.run_label,
    )
    return run_command(run_config)


if __name__ == "__main__":
    sys.exit(main())
