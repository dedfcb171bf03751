"""Cross-validation runs, window-size sweeps and synthetic experiments."""

import logging
from collections.abc import Sequence
from typing import Literal

import pandas as pd

from ..config import ExperimentConfig
from ..errors import ConditionTooShort, InsufficientSubwindows
from ..learn.cross_validation import cross_validate
from ..learn.models import CvReport, LearnSettings, WindowFeatureMatrix
from ..learn.preprocessing import apply_task, select_features
from ..signal.models import DelaySchedule, SignalRecord, WindowSpec
from ..synth.generators import generate_corpus
from ..synth.models import SignalParams
from .extractor import (
    RecordFeatures,
    extract_subwindows,
    prepare_records,
    window_matrix,
)

logger = logging.getLogger(__name__)

ExperimentKind = Literal["resp", "hr", "hrv"]

SWEEP_COLUMNS = [
    "subwindow_s",
    "window_s",
    "cv_mode",
    "classifier",
    "mean_accuracy",
    "macro_f1",
    "n_windows",
]
EXPERIMENT_COLUMNS = [
    "kind",
    "noise",
    "baseline",
    "stress",
    "mean_accuracy",
    "macro_f1",
]
EXPERIMENT_NOISE = (0.1, 0.3)

# kind -> (baseline parameters, stress levels, parameter varied)
EXPERIMENTS: dict[str, tuple[SignalParams, list[SignalParams], str]] = {
    "resp": (
        SignalParams(rpm=15),
        [SignalParams(rpm=r) for r in (16, 17, 18, 19, 20)],
        "rpm",
    ),
    "hr": (
        SignalParams(hr_bpm=70, hr_sd_bpm=1),
        [SignalParams(hr_bpm=h, hr_sd_bpm=1) for h in (71, 72, 73, 74, 75)],
        "hr_bpm",
    ),
    "hrv": (
        SignalParams(hr_bpm=70, hr_sd_bpm=1),
        [SignalParams(hr_bpm=70, hr_sd_bpm=s) for s in (2, 3, 4, 5)],
        "hr_sd_bpm",
    ),
}


def prepare_matrix(
    matrix: WindowFeatureMatrix, learn: LearnSettings
) -> WindowFeatureMatrix:
    """Restrict to the configured feature subset and set the task labels."""
    selected = matrix.select_columns(
        select_features(matrix.columns, learn.feature_subset)
    )
    return selected.with_labels(
        apply_task(selected.conditions, learn.task, learn.stress_labels)
    )


def evaluate_matrix(
    matrix: WindowFeatureMatrix, learn: LearnSettings, seed: int = 0
) -> CvReport:
    report = cross_validate(prepare_matrix(matrix, learn), learn, seed)
    logger.info(
        "%s %s: mean accuracy %.4f, macro F1 %.4f over %d folds",
        report.cv_mode,
        report.classifier,
        report.mean_accuracy,
        report.macro_f1,
        len(report.folds),
    )
    return report


def window_sweep(
    extracted: Sequence[RecordFeatures],
    window: WindowSpec,
    schedule: DelaySchedule,
    learn: LearnSettings,
    window_lengths: Sequence[float],
    seed: int = 0,
) -> pd.DataFrame:
    """Accuracy for every window length, reusing one set of subwindow features.

    Lengths shorter than the subwindow or longer than a record are skipped.
    A length that leaves a condition without a window on one side of its
    midpoint gets NaN metrics in intra-subject mode.
    """
    rows = []
    for window_s in window_lengths:
        if window_s < window.subwindow_s:
            logger.warning(
                "Skipping %g s windows: shorter than the %g s subwindow",
                window_s,
                window.subwindow_s,
            )
            continue
        spec = window.with_window(window_s)
        try:
            matrix = window_matrix(extracted, spec, schedule)
        except InsufficientSubwindows as e:
            logger.warning("Skipping %g s windows: %s", window_s, e)
            continue
        try:
            report = evaluate_matrix(matrix, learn, seed)
            accuracy, f1 = report.mean_accuracy, report.macro_f1
        except ConditionTooShort as e:
            logger.warning("Window %g s: %s", window_s, e)
            accuracy, f1 = float("nan"), float("nan")
        rows.append(
            {
                "subwindow_s": spec.subwindow_s,
                "window_s": spec.window_s,
                "cv_mode": learn.cv_mode,
                "classifier": learn.classifier,
                "mean_accuracy": accuracy,
                "macro_f1": f1,
                "n_windows": matrix.n_rows,
            }
        )
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)


def run_window_sweep(
    config: ExperimentConfig,
    extracted: Sequence[RecordFeatures],
    records: Sequence[SignalRecord] | None = None,
) -> pd.DataFrame:
    """Sweep every configured subwindow and window length.

    ``extracted`` holds features at the configured subwindow length. Other
    subwindow lengths need ``records`` to extract from; without them they
    are skipped.
    """
    learn = config.learn
    tables = []
    for subwindow_s in learn.sweep_subwindows:
        base = config.window.with_window(
            max(config.window.window_s, subwindow_s), subwindow_s
        )
        if subwindow_s == config.window.subwindow_s:
            features = list(extracted)
        elif records is None:
            logger.warning(
                "Skipping %g s subwindows: no corpus to extract them from",
                subwindow_s,
            )
            continue
        else:
            features = extract_subwindows(
                records,
                base,
                config.schedule,
                config.homology.rips_backend,
                config.workers,
            )
        tables.append(
            window_sweep(
                features,
                base,
                config.schedule,
                learn,
                learn.sweep_windows,
                config.seed,
            )
        )
    if not tables:
        return pd.DataFrame(columns=SWEEP_COLUMNS)
    return pd.concat(tables, ignore_index=True)


def run_experiment(
    kind: ExperimentKind,
    config: ExperimentConfig,
    noise_levels: Sequence[float] = EXPERIMENT_NOISE,
) -> pd.DataFrame:
    """Generate, extract and evaluate (LOSO) every stress level of one synthetic
    experiment at each noise level."""
    if kind not in EXPERIMENTS:
        raise ValueError(f"Unknown experiment '{kind}'")
    baseline, levels, varied = EXPERIMENTS[kind]
    signal = "resp" if kind == "resp" else "ecg"
    learn = config.learn.model_copy(update={"cv_mode": "loso"})

    rows = []
    for noise in noise_levels:
        for stress in levels:
            spec = config.synth.model_copy(
                update={
                    "signal": signal,
                    "baseline": baseline,
                    "stress": stress,
                    "noise": noise,
                    "seed": config.seed,
                }
            )
            records = prepare_records(
                generate_corpus(spec),
                config.ingest.target_fs,
                config.ingest.max_grid_rate,
            )
            extracted = extract_subwindows(
                records,
                config.window,
                config.schedule,
                config.homology.rips_backend,
                config.workers,
            )
            matrix = window_matrix(extracted, config.window, config.schedule)
            report = evaluate_matrix(matrix, learn, config.seed)
            rows.append(
                {
                    "kind": kind,
                    "noise": noise,
                    "baseline": getattr(baseline, varied),
                    "stress": getattr(stress, varied),
                    "mean_accuracy": report.mean_accuracy,
                    "macro_f1": report.macro_f1,
                }
            )
    return pd.DataFrame(rows, columns=EXPERIMENT_COLUMNS)


def format_summary(report: CvReport) -> str:
    """Plain-text summary: per-fold accuracies, means and the confusion matrix."""
    lines = [
        f"classifier: {report.classifier}",
        f"cv_mode: {report.cv_mode}",
        f"task: {report.task}",
        f"feature_subset: {report.feature_subset}",
        "",
        f"{'fold':>4}  {'subject':<12} {'direction':<16} {'n_test':>6} "
        f"{'features':>8} {'accuracy':>8}",
    ]
    for fold in report.folds:
        lines.append(
            f"{fold.fold:>4}  {fold.subject:<12} {fold.direction or '-':<16} "
            f"{fold.n_test:>6} {fold.n_features_used:>8} {fold.accuracy:>8.4f}"
        )
    lines.extend(
        [
            "",
            f"mean accuracy: {report.mean_accuracy:.4f}",
            f"macro F1: {report.macro_f1:.4f}",
        ]
    )
    if report.n_dropped_windows:
        lines.append(f"dropped midpoint windows: {report.n_dropped_windows}")

    labels = report.confusion.labels
    width = max(10, *(len(label) for label in labels))
    lines.extend(["", "confusion (rows: true, columns: predicted)"])
    lines.append(" " * width + "".join(f"{label:>{width + 1}}" for label in labels))
    for label, counts in zip(labels, report.confusion.counts, strict=True):
        lines.append(f"{label:<{width}}" + "".join(f"{c:>{width + 1}}" for c in counts))
    return "\n".join(lines) + "\n"

