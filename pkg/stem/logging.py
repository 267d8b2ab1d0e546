"""
stem/logging.py

Logging utilities for flipcount.
Provides centralized logging configuration and a timing helper for the
long-running enumeration and verification paths.
"""

import logging
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging_config(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Configure root logging. Logs go to stderr so stdout stays machine-readable.

    Args:
        level (str): Level name such as "INFO" or "DEBUG".
        log_file (str | None): Optional extra file handler.
    """
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    resolved = getattr(logging, str(level).upper(), None)
    if not isinstance(resolved, int):
        resolved = logging.WARNING
    logging.basicConfig(level=resolved, format=LOG_FORMAT, handlers=handlers, force=True)


def log_error(msg: str, logger_name: Optional[str] = None) -> None:
    """Log an error message."""
    logging.getLogger(logger_name or __name__).error(msg)


def log_info(msg: str, logger_name: Optional[str] = None) -> None:
    """Log an info message."""
    logging.getLogger(logger_name or __name__).info(msg)


@contextmanager
def log_duration(label: str, logger_name: Optional[str] = None) -> Iterator[None]:
    """Log how long the wrapped block took, at INFO."""
    logger = logging.getLogger(logger_name or __name__)
    start = time.perf_counter()
    try:
        yield
    finally:
        logger.info(f"{label} took {time.perf_counter() - start:.3f}s")
