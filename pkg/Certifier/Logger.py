"""
Heawood Certifier - Logging Configuration Module

Centralized logging for the certifier. Every module obtains its logger from
here so console output, log files and component filtering behave the same
everywhere.

Logging Architecture:
1. Console Handler: colored output on stderr (stdout carries command output)
2. Main Log File: rotating certifier.log with everything at DEBUG
3. Error Log File: rotating errors.log with ERROR and above
4. Search Log File: rotating search.log restricted to the exhaustive searches
   (cycle enumeration, zeon powers, group searches)

Usage:
    from .Logger import get_logger
    logger = get_logger(__name__)
    logger.info("Census finished")
"""

import copy
import logging
import logging.handlers
import sys
from .config import LOG_LEVEL, LOG_DIR

# ============================================================================
# LOGGING DIRECTORY AND CONFIGURATION SETUP
# ============================================================================

LOG_DIR.mkdir(parents=True, exist_ok=True)

LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}

SEARCH_COMPONENTS = ('certifier.cycles', 'certifier.zeon', 'certifier.groups')

# ============================================================================
# CUSTOM FORMATTERS
# ============================================================================

class ColoredFormatter(logging.Formatter):
    """
    Log formatter that adds ANSI color to the level name on the console.

    The record is copied before coloring so the file handlers sharing the
    same record keep plain level names.
    """

    COLORS = {
        'DEBUG': '\033[36m',
        'INFO': '\033[32m',
        'WARNING': '\033[33m',
        'ERROR': '\033[31m',
        'CRITICAL': '\033[35m',
        'RESET': '\033[0m'
    }

    def format(self, record):
        if record.levelname in self.COLORS:
            record = copy.copy(record)
            record.levelname = f"{self.COLORS[record.levelname]}{record.levelname}{self.COLORS['RESET']}"
        return super().format(record)


class CertifierLogger:
    """Centralized logger configuration for the certifier"""

    _loggers = {}
    _configured = False

    @classmethod
    def setup_logging(cls):
        """Setup logging configuration once"""
        if cls._configured:
            return

        log_level = LOG_LEVELS.get(LOG_LEVEL.upper(), logging.INFO)

        detailed_formatter = logging.Formatter(
            fmt='%(asctime)s | %(name)s | %(levelname)s | %(funcName)s:%(lineno)d | %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S'
        )
        colored_formatter = ColoredFormatter(
            fmt='%(asctime)s | %(name)s | %(levelname)s | %(message)s',
            datefmt='%H:%M:%S'
        )

        root_logger = logging.getLogger('certifier')
        root_logger.setLevel(logging.DEBUG)
        root_logger.propagate = False
        root_logger.handlers.clear()

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(log_level)
        console_handler.setFormatter(colored_formatter)
        root_logger.addHandler(console_handler)

        file_handler = logging.handlers.RotatingFileHandler(
            LOG_DIR / "certifier.log",
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(file_handler)

        error_handler = logging.handlers.RotatingFileHandler(
            LOG_DIR / "errors.log",
            maxBytes=5*1024*1024,   # 5MB
            backupCount=3,
            encoding='utf-8'
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(detailed_formatter)
        root_logger.addHandler(error_handler)

        search_handler = logging.handlers.RotatingFileHandler(
            LOG_DIR / "search.log",
            maxBytes=5*1024*1024,   # 5MB
            backupCount=3,
            encoding='utf-8'
        )
        search_handler.setLevel(logging.DEBUG)
        search_handler.setFormatter(detailed_formatter)
        search_handler.addFilter(lambda record: record.name.startswith(SEARCH_COMPONENTS))
        root_logger.addHandler(search_handler)

        cls._configured = True

        setup_logger = cls.get_logger('certifier.logger')
        setup_logger.debug(f"Logging system initialized with level: {LOG_LEVEL}")
        setup_logger.debug(f"Log files location: {LOG_DIR}")

    @classmethod
    def set_console_level(cls, level_name: str):
        """Override the console level (used by the --log-level flag)."""
        level = LOG_LEVELS.get(level_name.upper())
        if level is None:
            raise ValueError(f"Unknown log level: {level_name}")
        for handler in logging.getLogger('certifier').handlers:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler):
                handler.setLevel(level)

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """Get a logger instance under the certifier namespace"""
        if not cls._configured:
            cls.setup_logging()

        # module paths like Certifier.main map to certifier.main
        if name.startswith('Certifier.'):
            name = name.split('.', 1)[1].lower()
        if name != 'certifier' and not name.startswith('certifier.'):
            name = f"certifier.{name}"
        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(name)
        return cls._loggers[name]


def get_logger(name: str = None) -> logging.Logger:
    """Get a logger instance. If name is None, uses the caller's module name."""
    if name is None:
        import inspect
        frame = inspect.currentframe().f_back
        name = frame.f_globals.get('__name__', 'unknown')

    return CertifierLogger.get_logger(name)

# Initialize logging on import
CertifierLogger.setup_logging()

graph_logger = get_logger('certifier.graph')
cycle_logger = get_logger('certifier.cycles')
zeon_logger = get_logger('certifier.zeon')
group_logger = get_logger('certifier.groups')
verify_logger = get_logger('certifier.verify')
family_logger = get_logger('certifier.family')
database_logger = get_logger('certifier.database')

__all__ = [
    'get_logger',
    'CertifierLogger',
    'graph_logger',
    'cycle_logger',
    'zeon_logger',
    'group_logger',
    'verify_logger',
    'family_logger',
    'database_logger'
]
