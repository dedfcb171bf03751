"""CLI command running synth, extract and evaluate in one go."""

from pathlib import Path

import typer
from rich.console import Console

from ..errors import TdaStressError
from ..pipeline.extractor import prepare_records
from ..storage.manager import StorageManager
from .common import attach_log_file, resolve_config, setup_logging
from .evaluate import SWEEP_FILE, run_evaluate, show_report
from .extract import corpus_for, run_extract
from .options import (
    BACKEND_OPTION,
    CLASSIFIER_OPTION,
    CONFIG_OPTION,
    CORPUS_OPTION,
    CV_MODE_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    SUBSET_OPTION,
    SWEEP_OPTION,
    TASK_OPTION,
    VERBOSE_OPTION,
    WORKERS_OPTION,
)
from .synth import run_synth

console = Console()


def run_all(
    config_path: Path | None = CONFIG_OPTION,
    corpus: Path | None = CORPUS_OPTION,
    out: Path | None = OUT_OPTION,
    seed: int | None = SEED_OPTION,
    workers: int | None = WORKERS_OPTION,
    backend: str | None = BACKEND_OPTION,
    classifier: str | None = CLASSIFIER_OPTION,
    cv_mode: str | None = CV_MODE_OPTION,
    task: str | None = TASK_OPTION,
    subset: str | None = SUBSET_OPTION,
    sweep: bool = SWEEP_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Generate (unless a corpus is given), extract and evaluate.

    Examples:
        tda-stress all --out runs/resp --sweep
        tda-stress all --corpus data/drivedb -o runs/drivedb --task binary
    """
    setup_logging(verbose)
    extra = {"homology": {"rips_backend": backend}} if backend else None
    config = resolve_config(
        config_path,
        out=out,
        seed=seed,
        workers=workers,
        learn_overrides={
            "classifier": classifier,
            "cv_mode": cv_mode,
            "task": task,
            "feature_subset": subset,
        },
        extra=extra,
    )
    attach_log_file(config.out_dir)

    try:
        if corpus is None and config.ingest.corpus_dir is None:
            corpus_dir = run_synth(config)
            console.print(f"✅ Corpus written to {corpus_dir}")
        else:
            corpus_dir = corpus_for(config, corpus)

        matrix, _ = run_extract(config, corpus_dir)
        console.print(
            f"✅ Extracted {matrix.n_rows} windows x {len(matrix.columns)} features"
        )

        records = None
        if sweep:
            _, loaded = StorageManager(corpus_dir).load_corpus(config.sensors)
            records = prepare_records(
                loaded, config.ingest.target_fs, config.ingest.max_grid_rate
            )
        report, sweep_table = run_evaluate(config, config.out_dir, sweep, records)
    except TdaStressError as e:
        console.print(f"❌ {e}")
        raise typer.Exit(1) from None

    show_report(report)
    console.print(f"✅ Report written to {config.out_dir}")
    if sweep_table is not None:
        console.print(f"✅ Sweep of {len(sweep_table)} window sizes in {SWEEP_FILE}")
