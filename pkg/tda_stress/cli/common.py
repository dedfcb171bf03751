"""Config loading, logging setup and error reporting shared by the commands."""

import logging
from pathlib import Path
from typing import Any

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ..config import ExperimentConfig, format_validation_error, load_config
from ..errors import InvalidConfig
from ..learn.models import CvReport, LearnSettings

console = Console()

LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
LOG_FILE = "pipeline.log"


def setup_logging(verbose: bool = False) -> None:
    """Route library logging through rich on the console."""
    root = logging.getLogger()
    if not any(isinstance(h, RichHandler) for h in root.handlers):
        handler = RichHandler(console=console, show_path=False, markup=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        root.addHandler(handler)
    level = logging.DEBUG if verbose else logging.INFO
    root.setLevel(logging.DEBUG)
    for handler in root.handlers:
        if isinstance(handler, RichHandler):
            handler.setLevel(level)


def attach_log_file(out_dir: Path) -> Path:
    """Also write every log record to ``<out_dir>/pipeline.log``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    log_file = out_dir / LOG_FILE
    root = logging.getLogger()
    if not any(
        isinstance(h, logging.FileHandler)
        and getattr(h, "baseFilename", "") == str(log_file.absolute())
        for h in root.handlers
    ):
        fh = logging.FileHandler(log_file)
        fh.setLevel(logging.DEBUG)
        fh.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(fh)
        root.setLevel(logging.DEBUG)
    return log_file


def resolve_config(
    config_path: Path | None,
    out: Path | None = None,
    seed: int | None = None,
    workers: int | None = None,
    learn_overrides: dict[str, Any] | None = None,
    extra: dict[str, Any] | None = None,
) -> ExperimentConfig:
    """Load the config with CLI overrides applied, exiting with code 1 and one
    line per failing field when it is invalid."""
    overrides = {"out_dir": out, "seed": seed, "workers": workers, **(extra or {})}
    try:
        config = load_config(config_path, overrides)
        updates = {k: v for k, v in (learn_overrides or {}).items() if v is not None}
        if updates:
            try:
                learn = LearnSettings.model_validate(
                    {**config.learn.model_dump(), **updates}
                )
            except ValidationError as e:
                raise InvalidConfig(format_validation_error(e)) from None
            config = config.model_copy(update={"learn": learn})
    except InvalidConfig as e:
        console.print("❌ Invalid configuration:")
        for line in str(e).splitlines():
            console.print(f"  {line}")
        raise typer.Exit(1) from None
    return config


def report_table(report: CvReport) -> Table:
    """Rich rendering of a report's folds and pooled metrics."""
    table = Table(
        title=f"{report.cv_mode.upper()} {report.classifier.upper()} "
        f"({report.task}, {report.feature_subset})"
    )
    table.add_column("Fold", style="cyan", justify="right")
    table.add_column("Subject", style="cyan")
    table.add_column("Direction")
    table.add_column("Test windows", justify="right")
    table.add_column("Features", justify="right")
    table.add_column("Accuracy", style="green", justify="right")
    for fold in report.folds:
        table.add_row(
            str(fold.fold),
            fold.subject,
            fold.direction or "-",
            str(fold.n_test),
            str(fold.n_features_used),
            f"{fold.accuracy:.4f}",
        )
    table.add_section()
    table.add_row("", "Mean", "", "", "", f"{report.mean_accuracy:.4f}")
    table.add_row("", "Macro F1", "", "", "", f"{report.macro_f1:.4f}")
    return table


def confusion_table(report: CvReport) -> Table:
    table = Table(title="Confusion matrix (rows: true, columns: predicted)")
    table.add_column("", style="cyan")
    for label in report.confusion.labels:
        table.add_column(label, justify="right")
    for label, counts in zip(
        report.confusion.labels, report.confusion.counts, strict=True
    ):
        table.add_row(label, *(str(c) for c in counts))
    return table
