"""Logging utilities for seqformula."""

import logging
import os
from typing import Optional

STAGE_PREFIX = "seqformula.stages"
DEFAULT_LEVEL = "WARNING"


class StageNameFilter(logging.Filter):
    """Filter that extracts just the stage name from the full logger name."""

    def filter(self, record):
        """Extract stage name from the full logger name and pad it."""
        stage_name = record.name.split(".")[-1]
        # Pad to match length of "petkovsek" plus one
        record.stage_name = stage_name.ljust(10)
        # First letter of level name twice (e.g., "WW" for WARNING)
        record.level_short = record.levelname[0] * 2
        return True


# Global file handler for all stage loggers
_global_file_handler = None


def _parse_level(log_level: Optional[str]) -> int:
    """Turn a level name into a logging level, falling back to INFO for unknown names."""
    try:
        level = getattr(logging, (log_level or DEFAULT_LEVEL).upper())
    except AttributeError:
        return logging.INFO
    return level if isinstance(level, int) else logging.INFO


def get_logger(stage_name: str, log_level: Optional[str] = None, log_file: Optional[str] = None) -> logging.Logger:
    """Get a logger for a pipeline stage.

    Args:
        stage_name: Name of the stage (guess, holonomic, sections, petkovsek, pipeline, cli, ...)
        log_level: Optional log level string (DEBUG, INFO, WARNING, ERROR, CRITICAL).
                  If not specified, the logger keeps its current level (WARNING for new loggers)
        log_file: Optional path to log file. This is a global setting - all stage loggers share
                 the same file handler.

    Returns:
        logging.Logger: Configured logger instance
    """
    logger = logging.getLogger(f"{STAGE_PREFIX}.{stage_name}")

    if log_level is not None or logger.level == logging.NOTSET:
        logger.setLevel(_parse_level(log_level))

    if not logger.handlers:
        console_handler = logging.StreamHandler()
        name_filter = StageNameFilter()
        console_handler.addFilter(name_filter)
        formatter = logging.Formatter("%(asctime)s - %(level_short)s - %(stage_name)s %(message)s")
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)
        logger.propagate = False

    _attach_file_handler(logger, log_file)
    return logger


def _attach_file_handler(logger: logging.Logger, log_file: Optional[str]) -> None:
    """Attach the global file handler, creating it on first use."""
    global _global_file_handler  # pylint: disable=global-statement
    if log_file and _global_file_handler is None:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        _global_file_handler = logging.FileHandler(log_file, mode="w")
        _global_file_handler.addFilter(StageNameFilter())
        _global_file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(level_short)s - %(stage_name)s %(message)s")
        )

    if _global_file_handler is not None and _global_file_handler not in logger.handlers:
        logger.addHandler(_global_file_handler)


def configure_logging(log_level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """Apply a level (and optional log file) to every stage logger created so far.

    Args:
        log_level: Log level name applied to all stage loggers
        log_file: Optional path of the shared log file
    """
    for name in list(logging.Logger.manager.loggerDict):
        if name.startswith(STAGE_PREFIX + "."):
            get_logger(name.split(".")[-1], log_level, log_file)
