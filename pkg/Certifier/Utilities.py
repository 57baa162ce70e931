"""
Heawood Certifier - Utilities Module

Shared helpers used across the certifier: the exception hierarchy, the
error-handling decorator wrapped around every CLI command, stage timing for
the certification report and the order-preserving thread pool used by the
per-root searches.

Exceptions:
- CertifierError: base class of everything the certifier raises on purpose
- InputError: a rejected input or violated precondition (CLI exit code 2)
- InternalCheckError: an internal consistency check failed (CLI exit code 1)

Decorators:
- @handle_errors: logs failures of a command handler and maps them to exit codes
"""

import sys
import time
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from datetime import timedelta
from functools import wraps
from typing import Callable, Dict, Iterable, List, Optional, TypeVar

import humanize
import psutil

from .config import DEFAULT_THREADS
from .Logger import get_logger
logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# ============================================================================
# EXIT CODES
# ============================================================================

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# ============================================================================
# EXCEPTIONS
# ============================================================================

class CertifierError(Exception):
    """Base class for errors raised by the certifier."""


class InputError(CertifierError, ValueError):
    """An input was rejected: malformed data or a violated precondition."""


class InternalCheckError(CertifierError, RuntimeError):
    """An internal consistency check failed; this signals a bug, not bad input."""

# ============================================================================
# DECORATORS
# ============================================================================

def handle_errors(handler):
    """
    Error handling decorator for CLI command handlers.

    The wrapped handler receives the parsed arguments and returns an exit
    code. Exceptions are logged with the handler name and converted to the
    documented exit codes; a one-line message goes to stderr so stdout only
    ever carries command output.

    Usage:
        @handle_errors
        def cmd_aut(args, out):
            ...
            return EXIT_OK
    """
    @wraps(handler)
    def wrapper(args, out, *extra, **kwargs):
        handler_name = handler.__name__
        logger.debug(f"Executing command handler: {handler_name}")
        started = time.perf_counter()
        try:
            code = handler(args, out, *extra, **kwargs)
            elapsed = (time.perf_counter() - started) * 1000.0
            logger.debug(f"Handler {handler_name} finished with exit code {code} in {elapsed:.1f} ms")
            return code
        except InternalCheckError as e:
            logger.error(f"Internal check failed in {handler_name}: {e}", exc_info=True)
            print(f"internal error: {e}", file=sys.stderr)
            return EXIT_CHECK_FAILED
        except (InputError, OSError) as e:
            logger.warning(f"Input rejected in {handler_name}: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
    return wrapper

# ============================================================================
# TIMING AND RESOURCE TRACKING
# ============================================================================

@contextmanager
def stage_timer(name: str, sink: Dict[str, float], memory_sink: Optional[Dict[str, int]] = None):
    """
    Time a named stage of a longer computation.

    The elapsed wall time in milliseconds is stored in ``sink[name]``; when
    ``memory_sink`` is given the resident set size after the stage (bytes,
    via psutil) is stored there as well.
    """
    started = time.perf_counter()
    try:
        yield
    finally:
        elapsed = (time.perf_counter() - started) * 1000.0
        sink[name] = round(elapsed, 3)
        if memory_sink is not None:
            memory_sink[name] = psutil.Process().memory_info().rss
        logger.debug(f"Stage {name} took {elapsed:.1f} ms")


def format_elapsed(milliseconds: float) -> str:
    """Render a duration for humans, e.g. '1 second and 250 milliseconds'."""
    return humanize.precisedelta(timedelta(milliseconds=milliseconds), minimum_unit="milliseconds")

# ============================================================================
# PARALLEL HELPERS
# ============================================================================

def resolve_threads(threads: Optional[int]) -> int:
    """Apply the configured default to an optional thread hint."""
    if threads is None:
        return DEFAULT_THREADS
    if threads < 1:
        raise InputError("thread count must be at least 1")
    return threads


def run_parallel(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Map ``func`` over ``items`` and return results in input order.

    With one thread this is a plain map; otherwise the work is spread over a
    ThreadPoolExecutor. The result list is identical either way.
    """
    items = list(items)
    workers = resolve_threads(threads)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
