"""Registry of result-table presets"""

from typing import Dict

from app.tables.presets import (
    TABLE1,
    TABLE2,
    TABLE3,
    TABLE4,
    TABLE5,
    TABLE6,
    TABLE7,
    PrintedValues,
    TablePreset,
    TableRow,
)
from app.tables.runner import TableReport, row_seeds, run_table

# Registry of available tables
_TABLES: Dict[str, TablePreset] = {
    preset.name: preset for preset in (TABLE1, TABLE2, TABLE3, TABLE4, TABLE5, TABLE6, TABLE7)
}


def get_table(name: str) -> TablePreset:
    """
    Get a table preset by name

    Args:
        name: Table name (table1 .. table7)

    Raises:
        ValueError: If the table name is not found
    """
    table_name = name.lower() if name else ""
    preset = _TABLES.get(table_name)

    if preset is None:
        available = ", ".join(_TABLES.keys())
        raise ValueError(f"Unknown table '{name}'. Available tables: {available}")

    return preset


def register_table(preset: TablePreset) -> None:
    """Register a custom table preset under its name"""
    _TABLES[preset.name.lower()] = preset


def list_tables() -> list[str]:
    """Get a list of available table names"""
    return list(_TABLES.keys())


def list_tables_with_descriptions() -> dict[str, str]:
    """Map table names to their descriptions"""
    return {name: preset.get_description() for name, preset in _TABLES.items()}


__all__ = [
    "PrintedValues",
    "TablePreset",
    "TableRow",
    "TableReport",
    "row_seeds",
    "run_table",
    "get_table",
    "register_table",
    "list_tables",
    "list_tables_with_descriptions",
]
