"""CLI command for the synthetic stress-parameter experiments."""

from pathlib import Path
from typing import cast

import typer
from rich.console import Console
from rich.table import Table

from ..errors import TdaStressError
from ..pipeline.evaluator import EXPERIMENTS, ExperimentKind, run_experiment
from ..storage.manager import StorageManager
from .common import attach_log_file, resolve_config, setup_logging
from .options import (
    BACKEND_OPTION,
    CLASSIFIER_OPTION,
    CONFIG_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    VERBOSE_OPTION,
    WORKERS_OPTION,
)

console = Console()


def experiment(
    kind: str = typer.Argument(..., help="Experiment: resp, hr or hrv"),
    config_path: Path | None = CONFIG_OPTION,
    out: Path | None = OUT_OPTION,
    seed: int | None = SEED_OPTION,
    workers: int | None = WORKERS_OPTION,
    backend: str | None = BACKEND_OPTION,
    classifier: str | None = CLASSIFIER_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Accuracy against stress intensity on synthetic corpora.

    resp varies respiration rate, hr the mean heart rate and hrv the heart
    rate spread. Every level is run at two noise levels with LOSO
    cross-validation; results go to experiment_<kind>.csv.

    Examples:
        tda-stress experiment resp --out runs/exp
        tda-stress experiment hrv -o runs/exp --backend ripser -w 8
    """
    if kind not in EXPERIMENTS:
        console.print(
            f"❌ Unknown experiment '{kind}'; choose from {', '.join(EXPERIMENTS)}"
        )
        raise typer.Exit(1)

    setup_logging(verbose)
    extra = {"homology": {"rips_backend": backend}} if backend else None
    config = resolve_config(
        config_path,
        out=out,
        seed=seed,
        workers=workers,
        learn_overrides={"classifier": classifier},
        extra=extra,
    )
    attach_log_file(config.out_dir)

    try:
        with console.status(f"[bold green]Running the {kind} experiment..."):
            results = run_experiment(cast(ExperimentKind, kind), config)
        path = StorageManager(config.out_dir).save_table(
            results, f"experiment_{kind}.csv"
        )
    except TdaStressError as e:
        console.print(f"❌ {e}")
        raise typer.Exit(1) from None

    table = Table(title=f"{kind.upper()} experiment")
    table.add_column("Noise", justify="right")
    table.add_column("Baseline", justify="right")
    table.add_column("Stress", justify="right")
    table.add_column("Accuracy", style="green", justify="right")
    table.add_column("Macro F1", justify="right")
    for row in results.itertuples(index=False):
        table.add_row(
            f"{row.noise:g}",
            f"{row.baseline:g}",
            f"{row.stress:g}",
            f"{row.mean_accuracy:.4f}",
            f"{row.macro_f1:.4f}",
        )
    console.print(table)
    console.print(f"✅ Results written to {path}")
