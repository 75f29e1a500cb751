from typing import TYPE_CHECKING

from app.handlers.base import ReportHandler

if TYPE_CHECKING:
    from app.experiment import Report


class JsonReportHandler(ReportHandler):
    """Full report as indented JSON, exact rationals included"""

    extension = "json"

    def format(self, report: "Report") -> str:
        return report.model_dump_json(by_alias=True, indent=2) + "\n"

    def get_description(self) -> str:
        return "Complete report as JSON with exact 'p/q' values next to rounded floats"
