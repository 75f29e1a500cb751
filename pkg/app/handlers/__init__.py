"""Output format registry

Formats are looked up by name (--format) or by the extension of the --out
file. Each handler turns a Report into text; writing is left to the renderer.
"""

from pathlib import PurePath
from typing import Dict, Optional

from app.handlers.base import ReportHandler
from app.handlers.csv_handler import CsvReportHandler
from app.handlers.json_handler import JsonReportHandler

_HANDLERS: Dict[str, ReportHandler] = {
    "json": JsonReportHandler(),
    "csv": CsvReportHandler(),
}


def get_handler(name: str) -> ReportHandler:
    """
    Look up an output format

    Raises:
        ValueError: If no format of that name is registered
    """
    handler = _HANDLERS.get(name.lower() if name else "")
    if handler is None:
        available = ", ".join(_HANDLERS.keys())
        raise ValueError(f"Unknown format '{name}'. Available formats: {available}")
    return handler


def format_for_path(path: str) -> Optional[str]:
    """Name of the format whose extension matches the file suffix, if any"""
    suffix = PurePath(path).suffix.lower().lstrip(".")
    if not suffix:
        return None
    for name, handler in _HANDLERS.items():
        if handler.extension == suffix:
            return name
    return None


def register_handler(name: str, handler: ReportHandler) -> None:
    _HANDLERS[name.lower()] = handler


def list_handlers() -> list[str]:
    return list(_HANDLERS.keys())


def list_handlers_with_descriptions() -> dict[str, str]:
    """Format names mapped to their one-line descriptions"""
    return {name: handler.get_description() for name, handler in _HANDLERS.items()}


__all__ = [
    "ReportHandler",
    "CsvReportHandler",
    "JsonReportHandler",
    "get_handler",
    "format_for_path",
    "register_handler",
    "list_handlers",
    "list_handlers_with_descriptions",
]
