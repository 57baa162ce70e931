"""
Heawood Certifier - Configuration Module

This module holds every configurable parameter of the certifier: the worker
thread hint, logging destinations, the run-history database location and the
hard limits of the exhaustive searches. Values come from the environment (or
a local .env file) with sensible defaults, so a bare checkout works as-is.

Configuration Categories:
1. Search Settings - Thread hint and size limits of the exhaustive searches
2. Logging Settings - Log level and log file directory
3. Database Settings - Location of the certification history database

Environment Variables (all optional):
- CERTIFIER_THREADS: Default worker-thread hint for per-root searches (default: 1)
- LOG_LEVEL: Logging level for the console (default: INFO)
- CERTIFIER_LOG_DIR: Directory for rotating log files (default: <repo>/logs)
- CERTIFIER_DB_PATH: SQLite file holding certification runs (default: <repo>/certifier.db)

Only CERTIFIER_THREADS influences what a command computes; the others affect
diagnostics and storage only.
"""

from pathlib import Path
from dotenv import load_dotenv
import os

# ============================================================================
# ENVIRONMENT VARIABLE LOADING
# ============================================================================

load_dotenv()

REPO_ROOT = Path(__file__).parent.parent

# ============================================================================
# SEARCH CONFIGURATION
# ============================================================================

_threads_raw = os.getenv("CERTIFIER_THREADS", "1")
try:
    DEFAULT_THREADS = int(_threads_raw)
except ValueError:
    raise ValueError(f"CERTIFIER_THREADS must be an integer, got {_threads_raw!r}.")
if DEFAULT_THREADS < 1:
    raise ValueError("CERTIFIER_THREADS must be at least 1.")

MAX_VERTICES = 64                   # one adjacency row per machine word
AUTOMORPHISM_MAX_VERTICES = 20      # enumerative regime of the automorphism search
GROUP_ISOMORPHISM_MAX_ORDER = 10000

# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_DIR = Path(os.getenv("CERTIFIER_LOG_DIR", str(REPO_ROOT / "logs")))

# ============================================================================
# DATABASE CONFIGURATION
# ============================================================================

DB_PATH = Path(os.getenv("CERTIFIER_DB_PATH", str(REPO_ROOT / "certifier.db")))
