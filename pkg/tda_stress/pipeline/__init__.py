"""Extraction and evaluation stages shared by the CLI commands."""

from .evaluator import (
    evaluate_matrix,
    format_summary,
    prepare_matrix,
    run_experiment,
    run_window_sweep,
    window_sweep,
)
from .extractor import (
    RecordFeatures,
    extract_record,
    extract_subwindows,
    prepare_records,
    records_from_frame,
    run_extraction,
    subwindow_frame,
    window_matrix,
)

__all__ = [
    "RecordFeatures",
    "evaluate_matrix",
    "extract_record",
    "extract_subwindows",
    "format_summary",
    "prepare_matrix",
    "prepare_records",
    "records_from_frame",
    "run_experiment",
    "run_extraction",
    "run_window_sweep",
    "subwindow_frame",
    "window_matrix",
    "window_sweep",
]
