"""
Configuration for the 1-perfect orientation workbench
"""
import logging
import os
from pathlib import Path

from dotenv import load_dotenv

# Project paths
PROJECT_ROOT = Path(__file__).parent
load_dotenv(PROJECT_ROOT / ".env")

CACHE_DIR = Path(os.getenv("ONEPO_CACHE_DIR", PROJECT_ROOT / "cache"))
OUTPUT_DIR = PROJECT_ROOT / "output"
STORE_DIR = CACHE_DIR / "reports"

# Ensure directories exist
CACHE_DIR.mkdir(parents=True, exist_ok=True)
OUTPUT_DIR.mkdir(exist_ok=True)

# Runtime settings (overridable through .env / environment)
WORKERS = int(os.getenv("ONEPO_WORKERS", os.cpu_count() or 1))
LOG_LEVEL = os.getenv("ONEPO_LOG_LEVEL", "INFO").upper()
FORCE_REFRESH = os.getenv("ONEPO_FORCE_REFRESH", "false").lower() == "true"

# Desk-scale limits. Exceeding an advisory limit logs a warning.
LIMITS = {
    "enumeration_edges": 20,        # enumerate_one_perfect
    "chordless_n": 12,              # chordless_cycles
    "cyclic_n": 10,                 # cyclic_orientation_exists
    "containment_host": 16,         # find_containment host vertices
    "containment_pattern": 8,       # find_containment pattern vertices
    "builtin_enumeration_n": 8,     # enumerate_connected without a corpus
}

# Pattern family ranges exposed through pattern names
FAMILY_RANGES = {
    "F3": (3, 8),     # complement of C_2k
    "F4": (1, 6),     # complement of K2 + C_(2k+1)
}

# Generator defaults
GENERATOR_DEFAULTS = {
    "seed": 0x5EED,
    "max_block": 5,         # block_cactus: largest block size
    "pieces": 4,            # paste_sep2: number of pasted pieces
    "max_piece": 5,         # paste_sep2: largest piece size
}

# Cache file names
CORPUS_KEY = "connected_n{n}.g6"
SNAPSHOT_FILE = CACHE_DIR / "last_update.json"

# CLI exit codes
EXIT_CODES = {
    "accept": 0,
    "reject": 1,
    "usage": 2,
    "precondition": 3,
}

# Colours shared by charts and PDF reports
GRAPH_COLORS = {
    "vertex": "#2E7D32",
    "edge": "#9E9E9E",
    "arc": "#1565C0",
    "sink": "#F44336",
    "unused": "#E0E0E0",
    "text": "#333333",
}

# One colour per branch set of a witness model
BRANCH_SET_PALETTE = [
    "#1565C0", "#FFA000", "#2E7D32", "#8E24AA",
    "#F44336", "#00838F", "#6D4C41", "#C0CA33",
]

REPORT_TITLE = "1-Perfect Orientation Workbench"
REPORT_AUTHOR = "onepo workbench"

LOG_FORMAT = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"
LOG_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: str = None):
    """Configure root logging once for scripts, the CLI and the dashboard"""
    logging.basicConfig(
        level=level or LOG_LEVEL,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
    )


def limit_exceeded(logger: logging.Logger, name: str, value: int) -> bool:
    """Log a warning when an advisory desk-scale limit is exceeded"""
    bound = LIMITS[name]
    if value > bound:
        logger.warning("%s=%d exceeds the desk-scale limit %d; this may be slow", name, value, bound)
        return True
    return False
