"""Logging configuration for inertia diagnostics."""

import logging
import sys
from typing import Optional

PACKAGE_LOGGER = "src"

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None, verbose: bool = False) -> None:
    """Configure logging for the application.

    Non-verbose runs show only the Rich console output; a log file always receives
    DEBUG records. numpy floating-point warnings (overflow in divergent iterations)
    are routed through the same handlers.

    Args:
        level: Log level for stderr when verbose (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional log file path
        verbose: If True, log to stderr at ``level``; if False, suppress all but critical
    """
    console_level = getattr(logging, level.upper(), logging.INFO) if verbose else logging.CRITICAL
    package_level = logging.DEBUG if log_file else console_level

    formatter = logging.Formatter(LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    root_logger = logging.getLogger()
    root_logger.setLevel(min(console_level, package_level))
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    if verbose:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(console_level)
        console_handler.setFormatter(formatter)
        root_logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    logging.getLogger(PACKAGE_LOGGER).setLevel(package_level)

    logging.captureWarnings(True)
    logging.getLogger("py.warnings").setLevel(package_level)
