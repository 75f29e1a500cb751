"""
Logger module for euclab

Session-tagged loggers with keyword context. Reports go to stdout; every
logger here writes to stderr so the two never mix.

Usage:
    from app.logger import get_logger

    logger = get_logger("census")
    logger.info("Census started", q=67, d=3, total=300763)
"""

import logging

from .interface import Logger
from .default_logger import DefaultLogger
from .console_logger import ConsoleLogger


def get_logger(name: str) -> Logger:
    """
    Build a logger configured from LogSettings

    Args:
        name: Component name (census, sampler, cli, ...)

    Returns:
        ConsoleLogger for format 'console', DefaultLogger for 'plain'
    """
    from app.settings import get_settings

    settings = get_settings().log
    level = getattr(logging, settings.level, logging.INFO)
    if settings.format == "plain":
        return DefaultLogger(level=level, name=name)
    return ConsoleLogger(name=f"euclab.{name}", level=level)


def set_level(level: str) -> None:
    """Apply a level name to every console logger created so far"""
    numeric = getattr(logging, level.upper(), logging.INFO)
    for name, existing in logging.Logger.manager.loggerDict.items():
        if name.startswith("euclab") and isinstance(existing, logging.Logger):
            existing.setLevel(numeric)
            for handler in existing.handlers:
                handler.setLevel(numeric)


__all__ = [
    "Logger",
    "DefaultLogger",
    "ConsoleLogger",
    "get_logger",
    "set_level",
]
