"""Render module

Writes reports as JSON or CSV to stdout or a file.
"""

from app.render.renderer import ReportRenderer

__all__ = ["ReportRenderer"]
