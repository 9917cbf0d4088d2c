from .grids import grid_bounds
from .models import REAL_SLACK, BoundEntry, BoundReport, format_value
from .report import bound_report, family_bound, regular_gap_note, render_rows

__all__ = [
    "REAL_SLACK",
    "BoundEntry",
    "BoundReport",
    "bound_report",
    "family_bound",
    "format_value",
    "grid_bounds",
    "regular_gap_note",
    "render_rows",
]
