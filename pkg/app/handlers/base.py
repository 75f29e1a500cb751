from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from app.experiment import Report


class ReportHandler(ABC):
    """Base class for report output formats"""

    extension: str = "txt"

    @abstractmethod
    def format(self, report: "Report") -> str:
        """Serialize the report to text"""
        pass

    @abstractmethod
    def get_description(self) -> str:
        """Get a human-readable description of the handler"""
        pass
