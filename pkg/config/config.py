"""
Configuration module for the q-ladder verification toolkit.

Run parameters (family, q, alpha, nmax, precision) come from the command
line only; the environment is consulted for logging settings.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent

# Application Configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("LOG_FILE")

# Paths
TEMPLATES_DIR = PROJECT_ROOT / "templates"
LOGS_DIR = PROJECT_ROOT / "logs"

# Exact layer
DEFAULT_NMAX = 12
NMAX_LIMIT = 64  # beta_n ~ q^{-4n}; larger n only inflates the rationals

# Numeric layer
DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64
QUADCHECK_MIN_PRECISION_BITS = 128
GUARD_BITS = 8
DEFAULT_TOLERANCE_EXPONENT = 20  # relative 1e-20
ZERO_TOLERANCE_EXPONENT = 25  # absolute 1e-25 where the target is 0
QUADRATURE_LEVEL_CAP = 12
QUADCHECK_MAX_N = 4
TAIL_GUARD_BITS = 64  # weight below 2^-(precision+64) past the cut-off
NODE_CACHE_SIZE = 200_000  # (x, w(x) x) per tanh-sinh node, per integrator

# Tool Configuration
TOOL_CONFIG = {
    "table": {
        "output_format": "text",
    },
    "verify": {
        "default_nmax": 8,
        "output_format": "text",
    },
    "quadcheck": {
        "ladder_points": ["1/2", "1", "3"],
        "i_ratio_exponents": ["1/2", "3/2"],
        "output_format": "text",
    },
    "oracle": {
        "output_format": "text",
    },
}
