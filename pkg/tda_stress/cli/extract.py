"""CLI command for extracting topological window features from a corpus."""

from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from ..config import ExperimentConfig
from ..errors import TdaStressError
from ..learn.models import WindowFeatureMatrix
from ..pipeline.extractor import RecordFeatures, run_extraction
from ..storage.manager import FEATURES_FILE, StorageManager
from .common import attach_log_file, resolve_config, setup_logging
from .options import (
    BACKEND_OPTION,
    CONFIG_OPTION,
    CORPUS_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    VERBOSE_OPTION,
    WORKERS_OPTION,
    default_corpus,
)

console = Console()


def corpus_for(config: ExperimentConfig, corpus: Path | None) -> Path:
    """Explicit flag, then ``ingest.corpus_dir``, then ``<out_dir>/corpus``."""
    if corpus is not None:
        return corpus
    if config.ingest.corpus_dir is not None:
        return config.ingest.corpus_dir
    return default_corpus(config.out_dir)


def run_extract(
    config: ExperimentConfig, corpus_dir: Path
) -> tuple[WindowFeatureMatrix, list[RecordFeatures]]:
    storage = StorageManager(config.out_dir)
    with console.status(f"[bold green]Extracting features from {corpus_dir}..."):
        return run_extraction(config, corpus_dir, storage)


def extract(
    config_path: Path | None = CONFIG_OPTION,
    corpus: Path | None = CORPUS_OPTION,
    out: Path | None = OUT_OPTION,
    seed: int | None = SEED_OPTION,
    workers: int | None = WORKERS_OPTION,
    backend: str | None = BACKEND_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Compute the windowed topological feature matrix of a corpus.

    Writes features.csv with its schema sidecar and the subwindow feature
    cache used by window-size sweeps.

    Examples:
        tda-stress extract --out runs/resp
        tda-stress extract --corpus data/wesad --out runs/wesad -w 8
    """
    setup_logging(verbose)
    extra = {"homology": {"rips_backend": backend}} if backend else None
    config = resolve_config(
        config_path, out=out, seed=seed, workers=workers, extra=extra
    )
    attach_log_file(config.out_dir)
    corpus_dir = corpus_for(config, corpus)

    try:
        matrix, extracted = run_extract(config, corpus_dir)
    except TdaStressError as e:
        console.print(f"❌ {e}")
        raise typer.Exit(1) from None

    table = Table(title="Extracted Features")
    table.add_column("Parameter", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Records", str(len(extracted)))
    table.add_row("Subjects", str(len(set(matrix.subjects))))
    table.add_row("Windows", str(matrix.n_rows))
    table.add_row("Feature columns", str(len(matrix.columns)))
    table.add_row("Window / subwindow", _window_label(config))
    console.print(table)
    console.print(f"✅ Features written to {config.out_dir / FEATURES_FILE}")


def _window_label(config: ExperimentConfig) -> str:
    w = config.window
    return f"{w.window_s:g} s / {w.subwindow_s:g} s"
