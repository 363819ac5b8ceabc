"""
Logging configuration module.

Provides centralized logging setup for the dlogmap CLI.
"""

import logging

VALID_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# Marks the handler installed by setup_logging so repeated calls replace it
HANDLER_NAME = "dlogmap-cli"


def setup_logging(log_levels: str = None):
    """Configure logging based on --log argument.

    Args:
        log_levels: Comma-separated list of log levels (e.g., "info,debug")
                   Valid levels: DEBUG, INFO, WARNING, ERROR, CRITICAL.
                   Records at or above the lowest listed level are shown once.
    """
    # Configure root logger
    logger = logging.getLogger()
    for handler in [h for h in logger.handlers if h.get_name() == HANDLER_NAME]:
        logger.removeHandler(handler)

    if log_levels:
        levels = [level.strip().upper() for level in log_levels.split(",")]
        unknown = [level for level in levels if level not in VALID_LEVELS]
        if unknown:
            raise ValueError(f"unknown log level(s): {', '.join(unknown)}")

        lowest = min(getattr(logging, level) for level in levels)
        handler = logging.StreamHandler()
        handler.set_name(HANDLER_NAME)
        handler.setLevel(lowest)
        handler.setFormatter(logging.Formatter(
            "%(levelname)s: %(message)s" if lowest == logging.INFO
            else "%(levelname)s: %(name)s: %(message)s"
        ))
        logger.addHandler(handler)
        logger.setLevel(lowest)
    else:
        # Default: no logging output
        logger.setLevel(logging.CRITICAL + 1)
