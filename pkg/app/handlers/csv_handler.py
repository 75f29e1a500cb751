import csv
import io
from typing import TYPE_CHECKING

from app.handlers.base import ReportHandler

if TYPE_CHECKING:
    from app.experiment import Report


def _cell(value: object) -> object:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


class CsvReportHandler(ReportHandler):
    """The report's table view as CSV, header first"""

    extension = "csv"

    def format(self, report: "Report") -> str:
        """
        Write the rows of report.csv_table()

        Raises:
            ValueError: If a row does not match the header width
        """
        header, rows = report.csv_table()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for index, row in enumerate(rows):
            if len(row) != len(header):
                raise ValueError(f"Row {index} has {len(row)} cells, header has {len(header)}")
            writer.writerow([_cell(value) for value in row])
        return buf.getvalue()

    def get_description(self) -> str:
        return "Table rows as CSV with rounded floats (column order fixed per report kind)"
