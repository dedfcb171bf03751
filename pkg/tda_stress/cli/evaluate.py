"""CLI command for cross-validating classifiers on extracted features."""

from collections.abc import Sequence
from pathlib import Path

import pandas as pd
import typer
from rich.console import Console

from ..config import ExperimentConfig
from ..errors import TdaStressError
from ..learn.models import CvReport
from ..pipeline.evaluator import evaluate_matrix, format_summary, run_window_sweep
from ..pipeline.extractor import RecordFeatures, prepare_records, records_from_frame
from ..signal.models import SignalRecord
from ..storage.manager import MANIFEST_FILE, StorageManager
from .common import (
    attach_log_file,
    confusion_table,
    report_table,
    resolve_config,
    setup_logging,
)
from .extract import corpus_for
from .options import (
    CLASSIFIER_OPTION,
    CONFIG_OPTION,
    CV_MODE_OPTION,
    FEATURES_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    SUBSET_OPTION,
    SWEEP_OPTION,
    TASK_OPTION,
    VERBOSE_OPTION,
)

console = Console()

SWEEP_FILE = "window_sweep.csv"


def run_evaluate(
    config: ExperimentConfig,
    features_dir: Path,
    sweep: bool = False,
    records: Sequence[SignalRecord] | None = None,
) -> tuple[CvReport, pd.DataFrame | None]:
    """Cross-validate on ``features_dir`` and write the report, the summary
    and, when asked, the window-size sweep into ``config.out_dir``.

    The sweep reuses the subwindow cache next to the features; ``records``
    are only needed for subwindow lengths other than the cached one.
    """
    source = StorageManager(features_dir)
    out = StorageManager(config.out_dir)
    with console.status("[bold green]Cross-validating..."):
        matrix, _ = source.load_features()
        report = evaluate_matrix(matrix, config.learn, config.seed)
    out.save_report(report)
    out.save_text(format_summary(report))

    sweep_table = None
    if sweep:
        frame, sub_schema = source.load_subwindow_features()
        extracted: list[RecordFeatures] = records_from_frame(frame, sub_schema)
        swept = config.model_copy(
            update={"window": sub_schema.window, "schedule": sub_schema.schedule}
        )
        with console.status("[bold green]Sweeping window sizes..."):
            sweep_table = run_window_sweep(swept, extracted, records)
        out.save_table(sweep_table, SWEEP_FILE)
    return report, sweep_table


def show_report(report: CvReport) -> None:
    console.print(report_table(report))
    console.print(confusion_table(report))
    if report.n_dropped_windows:
        console.print(
            f"[yellow]{report.n_dropped_windows} windows straddling a "
            "condition midpoint were dropped[/yellow]"
        )


def evaluate(
    config_path: Path | None = CONFIG_OPTION,
    features: Path | None = FEATURES_OPTION,
    out: Path | None = OUT_OPTION,
    seed: int | None = SEED_OPTION,
    classifier: str | None = CLASSIFIER_OPTION,
    cv_mode: str | None = CV_MODE_OPTION,
    task: str | None = TASK_OPTION,
    subset: str | None = SUBSET_OPTION,
    sweep: bool = SWEEP_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Cross-validate a classifier on an extracted feature matrix.

    Writes report.json and summary.txt, plus window_sweep.csv with --sweep.

    Examples:
        tda-stress evaluate --out runs/resp
        tda-stress evaluate -o runs/wesad --task binary --cv-mode intra
        tda-stress evaluate -o runs/resp --classifier lda --subset emb1_h1
    """
    setup_logging(verbose)
    config = resolve_config(
        config_path,
        out=out,
        seed=seed,
        learn_overrides={
            "classifier": classifier,
            "cv_mode": cv_mode,
            "task": task,
            "feature_subset": subset,
        },
    )
    attach_log_file(config.out_dir)
    features_dir = features or config.out_dir

    try:
        records = _sweep_records(config) if sweep else None
        report, sweep_table = run_evaluate(config, features_dir, sweep, records)
    except TdaStressError as e:
        console.print(f"❌ {e}")
        raise typer.Exit(1) from None

    show_report(report)
    console.print(f"✅ Report written to {config.out_dir}")
    if sweep_table is not None:
        console.print(f"✅ Sweep of {len(sweep_table)} window sizes in {SWEEP_FILE}")


def _sweep_records(config: ExperimentConfig) -> list[SignalRecord] | None:
    """Corpus records for re-extracting other subwindow lengths, if any."""
    others = [
        s for s in config.learn.sweep_subwindows if s != config.window.subwindow_s
    ]
    corpus_dir = corpus_for(config, None)
    if not others or not (corpus_dir / MANIFEST_FILE).exists():
        return None
    _, records = StorageManager(corpus_dir).load_corpus(config.sensors)
    return prepare_records(
        records, config.ingest.target_fs, config.ingest.max_grid_rate
    )
