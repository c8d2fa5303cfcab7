import logging
from typing import Optional

# Use colorlog as an optional dependency - which in turn uses colorama - for prettier logs.
# NOTE Colours may not work on Git Bash. See: https://github.com/tartley/colorama/pull/226
try:
    import colorlog
except ImportError:
    colorlog = None

from chibound.core.exceptions import InvalidLogLevel

__all__ = (
    "LOG_LEVELS",
    "resolve_level",
    "setup_logging",
)


LOG_LEVELS = (
    "DEBUG",
    "INFO",
    "WARNING",
    "ERROR",
    "CRITICAL",
)

LOG_FORMAT_BASIC = "%(log_color)s%(levelname)s: %(message)s"
LOG_FORMAT_DETAILED = "%(log_color)s%(asctime)s %(levelname)-8s [%(name)s] %(message)s"

LOG_COLORS = {
    LOG_LEVELS[0]: "cyan",
    LOG_LEVELS[1]: "green",
    LOG_LEVELS[2]: "yellow",
    LOG_LEVELS[3]: "red",
    LOG_LEVELS[4]: "red,bg_white",
}


def resolve_level(level: int | str) -> int:
    if isinstance(level, int):
        return level
    name = level.strip().upper()
    if name not in LOG_LEVELS:
        raise InvalidLogLevel(level)
    return getattr(logging, name)


def setup_logging(
    level: int | str = logging.WARNING,
    detailed: bool = False,
    log_format: Optional[str] = None,
    log_colors: dict = LOG_COLORS,
):
    """
    Send log records to stderr, colored when colorlog is available. Standard
    output stays free for command results.
    """
    log_format = log_format or (LOG_FORMAT_DETAILED if detailed else LOG_FORMAT_BASIC)
    log_handler = logging.StreamHandler()

    if colorlog is not None:
        log_handler.setFormatter(
            colorlog.ColoredFormatter(fmt=log_format, log_colors=log_colors)
        )
    else:
        log_handler.setFormatter(
            logging.Formatter(fmt=log_format.replace("%(log_color)s", ""))
        )

    logging.basicConfig(level=resolve_level(level), handlers=[log_handler], force=True)
