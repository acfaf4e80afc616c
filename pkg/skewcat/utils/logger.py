"""
Logging for skewcat.

Every module logger is a child of the ``skewcat`` package logger, which owns
the handlers: one on stderr, so reports on stdout stay parseable, and a file
handler when SKEWCAT_LOG_DIR is set. The CLI adjusts the package level with
``set_verbosity``.
"""

import logging
import os
import sys
import time
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Optional

PACKAGE = "skewcat"


class LogConfig:
    """Configuration for logging system.

    [ATTRIBUTES]
    LOG_DIR : Optional[Path]
        Directory for log files, taken from SKEWCAT_LOG_DIR
    LOG_FORMAT : str
        Format string for log messages
    DATE_FORMAT : str
        Format string for timestamps
    LEVELS : tuple
        Levels selected by verbosity -1, 0, 1 and 2
    """

    LOG_DIR = Path(os.environ["SKEWCAT_LOG_DIR"]) if os.environ.get("SKEWCAT_LOG_DIR") else None
    LOG_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
    DATE_FORMAT = "%H:%M:%S"
    LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG, logging.DEBUG)


def _package_logger() -> logging.Logger:
    root = logging.getLogger(PACKAGE)
    if root.handlers:
        return root
    formatter = logging.Formatter(fmt=LogConfig.LOG_FORMAT, datefmt=LogConfig.DATE_FORMAT)
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)
    if LogConfig.LOG_DIR is not None:
        LogConfig.LOG_DIR.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(LogConfig.LOG_DIR / f"{PACKAGE}.log")
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)
    root.setLevel(logging.INFO)
    root.propagate = False
    return root


def setup_logger(name: str,
                 log_file: Optional[str] = None,
                 level: Optional[int] = None) -> logging.Logger:
    """Return a logger attached to the skewcat handlers.

    [PARAMETERS]
    name : str
        Logger name, usually ``__name__``. Names outside the package are
        nested under it.
    log_file : Optional[str]
        Extra file receiving this logger's records only
    level : Optional[int]
        Level for this logger; None defers to the package level

    [OUTPUT]
    logging.Logger:
        Configured logger instance

    [EXAMPLE]
    >>> logger = setup_logger('skewcat.modules.normalize')
    >>> logger.debug('3 I-modules over Ch2')
    """
    _package_logger()
    if name != PACKAGE and not name.startswith(PACKAGE + "."):
        name = f"{PACKAGE}.{name}"
    logger = logging.getLogger(name)
    if level is not None:
        logger.setLevel(level)
    if log_file and not any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(log_file)
        handler.setFormatter(logging.Formatter(LogConfig.LOG_FORMAT, LogConfig.DATE_FORMAT))
        logger.addHandler(handler)
    return logger


def set_verbosity(verbosity: int) -> int:
    """Set the package level from a -q/-v count and return it."""
    index = max(-1, min(verbosity, len(LogConfig.LEVELS) - 2)) + 1
    level = LogConfig.LEVELS[index]
    _package_logger().setLevel(level)
    return level


def _subject(args: tuple) -> str:
    if not args:
        return ""
    name = getattr(args[0], "name", None)
    return f" on {name}" if isinstance(name, str) and name else ""


def log_execution(func: Optional[Callable] = None,
                  *,
                  level: int = logging.INFO) -> Callable:
    """Decorator logging start, duration and failure of a check.

    The first positional argument names the subject when it has a ``name``.

    [PARAMETERS]
    func : Optional[Callable]
        Function to wrap
    level : int
        Level used for the start and completion messages

    [OUTPUT]
    Callable:
        Wrapped function

    [EXAMPLE]
    >>> @log_execution(level=logging.DEBUG)
    >>> def enumerate_modules(c, bounds=None):
    >>>     ...
    """
    def decorator(func: Callable) -> Callable:
        logger = setup_logger(func.__module__)

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any):
            what = f"{func.__name__}{_subject(args)}"
            logger.log(level, f"{what}: started")
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(f"{what}: {type(e).__name__}: {e}")
                raise
            logger.log(level, f"{what}: done in {time.perf_counter() - start:.2f}s")
            return result

        return wrapper

    return decorator(func) if func else decorator
