"""Report renderer implementation

Formats a report through the handler registry and writes it to stdout or a file.
"""

import sys
from pathlib import Path
from typing import Optional, TextIO

from app.experiment import Report
from app.handlers import format_for_path, get_handler, list_handlers
from app.logger import get_logger
from app.settings import get_settings


class ReportRenderer:
    """Writes reports in a registered output format"""

    def __init__(self, stream: Optional[TextIO] = None):
        self.logger = get_logger("renderer")
        self.stream = stream
        self.logger.debug("ReportRenderer initialized", formats=list_handlers())

    def render(self, report: Report, fmt: Optional[str] = None, out: Optional[str] = None) -> str:
        """
        Format a report and write it out

        Args:
            report: Any Report model
            fmt: Output format (default: from the out suffix, then settings)
            out: Target file; stdout when omitted

        Returns:
            The formatted text

        Raises:
            ValueError: If the format is not registered
            RuntimeError: If formatting or writing fails
        """
        fmt = fmt or (format_for_path(out) if out else None) or get_settings().output.format
        try:
            handler = get_handler(fmt)
        except ValueError as e:
            self.logger.error("Unsupported output format", format=fmt, error=str(e))
            raise

        try:
            text = handler.format(report)
        except Exception as e:
            self.logger.error("Failed to format report", kind=report.kind, error=str(e))
            raise RuntimeError(f"Failed to format {report.kind} report: {str(e)}")

        try:
            if out:
                path = Path(out)
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(text, encoding="utf-8")
                target = str(path)
            else:
                stream = self.stream or sys.stdout
                stream.write(text)
                stream.flush()
                target = "stdout"
        except OSError as e:
            self.logger.error("Failed to write report", target=out, error=str(e))
            raise RuntimeError(f"Failed to write report to {out}: {str(e)}")

        self.logger.info(
            "Report written", kind=report.kind, format=fmt, size_bytes=len(text), target=target
        )
        return text
