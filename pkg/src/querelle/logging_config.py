"""
Logging for querelle.

Every module logs under the ``querelle`` namespace. Nothing is printed until a
level is chosen: the library default is WARNING and the CLI passes ``--log-level``
through its settings. Records go to stderr so that JSON on stdout stays clean.
"""

import logging
from typing import Literal, get_args

from rich.console import Console
from rich.logging import RichHandler

ROOT_LOGGER = "querelle"

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]
LOG_LEVELS: tuple[str, ...] = get_args(LogLevel)


def setup_logging(level: str | None = None) -> None:
    """Set the querelle level, installing the stderr handler on first use.

    Raises:
        ValueError: if the level is not one of LOG_LEVELS (case-insensitive)
    """
    name = (level or "WARNING").upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"unknown log level {level!r}; expected one of {', '.join(LOG_LEVELS)}")

    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(name)
    if not root.handlers:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            markup=False,
            log_time_format="%H:%M:%S",
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        root.addHandler(handler)


def get_logger(name: str) -> logging.Logger:
    """Logger for a module, placed under the querelle namespace."""
    if not logging.getLogger(ROOT_LOGGER).handlers:
        setup_logging()

    if name == ROOT_LOGGER or name.startswith(f"{ROOT_LOGGER}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
