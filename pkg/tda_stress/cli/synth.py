"""CLI command for generating a synthetic corpus."""

from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from ..config import ExperimentConfig
from ..errors import TdaStressError
from ..storage.manager import StorageManager
from ..synth.generators import generate_corpus
from ..utils.rate_parser import format_rate
from .common import attach_log_file, resolve_config, setup_logging
from .options import (
    CONFIG_OPTION,
    OUT_OPTION,
    SEED_OPTION,
    VERBOSE_OPTION,
    default_corpus,
)

console = Console()


def run_synth(config: ExperimentConfig) -> Path:
    """Generate the configured corpus into ``<out_dir>/corpus``."""
    spec = config.synth.model_copy(update={"seed": config.seed})
    corpus_dir = default_corpus(config.out_dir)
    with console.status(
        f"[bold green]Generating {spec.n_subjects} {spec.signal.upper()} subjects..."
    ):
        records = generate_corpus(spec)
        StorageManager(corpus_dir).save_corpus(records, seed=spec.seed)
    return corpus_dir


def synth(
    config_path: Path | None = CONFIG_OPTION,
    out: Path | None = OUT_OPTION,
    seed: int | None = SEED_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Generate a synthetic baseline/stress corpus.

    Writes one CSV per subject (t_seconds, value, condition) and a
    manifest.json to <out>/corpus.

    Examples:
        tda-stress synth --out runs/resp --seed 3
        tda-stress synth -c experiment.json
    """
    setup_logging(verbose)
    config = resolve_config(config_path, out=out, seed=seed)
    attach_log_file(config.out_dir)

    spec = config.synth
    table = Table(title="Synthetic Corpus")
    table.add_column("Parameter", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Signal", spec.signal)
    table.add_row("Subjects", str(spec.n_subjects))
    table.add_row("Duration per condition", f"{spec.duration_s:g} s")
    table.add_row("Sampling rate", f"{format_rate(spec.fs)} Hz")
    table.add_row("Noise", f"{spec.noise:g}")
    table.add_row("Seed", str(config.seed))
    console.print(table)

    try:
        corpus_dir = run_synth(config)
    except TdaStressError as e:
        console.print(f"❌ {e}")
        raise typer.Exit(1) from None

    console.print(f"✅ Corpus written to {corpus_dir}")
