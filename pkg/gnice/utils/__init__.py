"""Utility modules for gnice."""

from gnice.utils.console import Console
from gnice.utils.error_handler import handle_errors
from gnice.utils.report import Report, verdict

__all__ = [
    "Console",
    "Report",
    "handle_errors",
    "verdict",
]
