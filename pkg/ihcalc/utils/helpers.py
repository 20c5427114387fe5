"""
ihcalc Utility Functions

Common utility functions used across the application.
"""
import logging
from pathlib import Path

from .config import COMMENT_CHAR, DEFAULT_LOG_LEVEL


# ============================================================================
# Input Utilities
# ============================================================================
def read_source(value: str) -> str:
    """
    Return the text of ``value``.

    Arguments name either an existing file or inline text (a quoted circuit on
    the command line), and the file wins when both readings are possible.
    """
    p = Path(value)
    try:
        if p.is_file():
            return p.read_text(encoding="utf-8")
    except OSError:
        pass
    return value


def strip_comment(line: str) -> str:
    """Drop a trailing ``#`` comment from one line."""
    pos = line.find(COMMENT_CHAR)
    return line if pos < 0 else line[:pos]


# ============================================================================
# Logging Utilities
# ============================================================================
def setup_logger(name: str, level: str = DEFAULT_LOG_LEVEL) -> logging.Logger:
    """
    Setup a logger with consistent formatting.

    Args:
        name: Logger name
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    Returns:
        Configured logger instance
    """
    from .config import LOG_FORMAT, LOG_DATE_FORMAT

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, level.upper()))

    # Only add handler if none exists and nothing upstream will print it
    if not logger.handlers and not logging.getLogger().handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATE_FORMAT))
        logger.addHandler(handler)

    return logger
