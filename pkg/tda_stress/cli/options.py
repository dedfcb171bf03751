"""Standardized CLI option definitions for consistent shorthand mappings.

Every command takes its shared options from here so flags and shorthands
stay the same across commands.
"""

from pathlib import Path

import typer

# Core options - used by every pipeline command
CONFIG_OPTION = typer.Option(
    None, "--config", "-c", help="Config file (.json or .toml)"
)

OUT_OPTION = typer.Option(
    None, "--out", "-o", help="Output directory (defaults to config out_dir)"
)

SEED_OPTION = typer.Option(None, "--seed", "-s", help="Seed for generation and SVM")

WORKERS_OPTION = typer.Option(
    None, "--workers", "-w", help="Worker processes for feature extraction"
)

VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Log debug messages")

# Input options
CORPUS_OPTION = typer.Option(
    None, "--corpus", help="Corpus directory (defaults to <out>/corpus)"
)

FEATURES_OPTION = typer.Option(
    None, "--features", help="Directory with features.csv (defaults to <out>)"
)

# Learning options - override the config's learn section
CLASSIFIER_OPTION = typer.Option(None, "--classifier", help="Classifier: svc or lda")

CV_MODE_OPTION = typer.Option(None, "--cv-mode", help="Cross-validation: loso or intra")

TASK_OPTION = typer.Option(None, "--task", help="Task: binary or multiclass")

SUBSET_OPTION = typer.Option(
    None, "--subset", help="Feature subset, e.g. all, level_sets, emb1_h1"
)

SWEEP_OPTION = typer.Option(
    False, "--sweep", help="Also write the window-size sweep CSV"
)

BACKEND_OPTION = typer.Option(
    None, "--backend", help="Rips backend: native or ripser"
)


def default_corpus(out_dir: Path) -> Path:
    return out_dir / "corpus"
