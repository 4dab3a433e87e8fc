from .run_config import RunConfig
from .report_format import (
    report_to_dict,
    report_from_dict,
    report_to_json,
    report_from_json,
    format_betti_grid,
    format_text,
    summary_line,
)
from .batch import BatchResult, run_row, random_rows, table_rows, run_batch
from .main import build_parser, main, cmd_compute, cmd_detect, cmd_cable, cmd_table

__all__ = [
    # Configuration
    "RunConfig",

    # Reports
    "report_to_dict",
    "report_from_dict",
    "report_to_json",
    "report_from_json",
    "format_betti_grid",
    "format_text",
    "summary_line",

    # Batch runs
    "BatchResult",
    "run_row",
    "random_rows",
    "table_rows",
    "run_batch",

    # Entry points
    "build_parser",
    "main",
    "cmd_compute",
    "cmd_detect",
    "cmd_cable",
    "cmd_table",
]
