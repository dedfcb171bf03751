"""End-to-end runs on full-size synthetic corpora with the default backend."""

import time

import pandas as pd
import pytest

from tda_stress.config import ExperimentConfig
from tda_stress.learn.models import LearnSettings
from tda_stress.pipeline.evaluator import evaluate_matrix, run_experiment, window_sweep
from tda_stress.pipeline.extractor import (
    RecordFeatures,
    extract_subwindows,
    window_matrix,
)
from tda_stress.synth.generators import generate_corpus

pytestmark = pytest.mark.slow

WORKERS = 4


@pytest.fixture(scope="module")
def config() -> ExperimentConfig:
    config = ExperimentConfig(workers=WORKERS)
    assert config.homology.rips_backend == "native"
    return config


@pytest.fixture(scope="module")
def extracted(config: ExperimentConfig) -> list[RecordFeatures]:
    """Default corpus: 20 subjects, 120 s per condition at 50 Hz, 15 vs 18 rpm."""
    records = generate_corpus(config.synth)
    return extract_subwindows(
        records,
        config.window,
        config.schedule,
        config.homology.rips_backend,
        config.workers,
    )


def _accuracy_by_stress(table: pd.DataFrame) -> dict[float, float]:
    return dict(zip(table["stress"], table["mean_accuracy"], strict=True))


def _assert_rising(table: pd.DataFrame, tolerance: float = 0.02) -> None:
    accuracies = table.sort_values("stress")["mean_accuracy"].tolist()
    for weaker, stronger in zip(accuracies, accuracies[1:], strict=False):
        assert stronger >= weaker - tolerance, accuracies


class TestRespCorpus:
    """Test the default RESP corpus."""

    def test_loso_svc_separates_conditions(
        self, config: ExperimentConfig, extracted: list[RecordFeatures]
    ) -> None:
        matrix = window_matrix(extracted, config.window, config.schedule)
        assert matrix.n_rows == 20 * 2 * 31
        report = evaluate_matrix(matrix, config.learn, config.seed)
        assert report.mean_accuracy >= 0.95

    def test_intra_not_worse_than_loso(
        self, config: ExperimentConfig, extracted: list[RecordFeatures]
    ) -> None:
        matrix = window_matrix(extracted, config.window, config.schedule)
        loso = evaluate_matrix(matrix, config.learn, config.seed)
        intra = evaluate_matrix(
            matrix, config.learn.model_copy(update={"cv_mode": "intra"}), config.seed
        )
        assert intra.mean_accuracy >= loso.mean_accuracy - 0.02

    def test_longer_windows_do_not_lose_accuracy(
        self, config: ExperimentConfig, extracted: list[RecordFeatures]
    ) -> None:
        table = window_sweep(
            extracted,
            config.window,
            config.schedule,
            LearnSettings(),
            [10.0, 120.0],
            config.seed,
        )
        short, long = table["mean_accuracy"].tolist()
        assert long >= short


class TestExperiments:
    """Test accuracy against the size of the baseline/stress gap at noise 0.1."""

    def test_respiration_rate(self, config: ExperimentConfig) -> None:
        started = time.perf_counter()
        table = run_experiment("resp", config, noise_levels=(0.1,))
        elapsed = time.perf_counter() - started

        accuracy = _accuracy_by_stress(table)
        assert accuracy[16] < accuracy[20]
        for rpm in (17, 18, 19, 20):
            assert accuracy[rpm] >= 0.95, (rpm, accuracy)
        _assert_rising(table)
        # Five corpora of the default size
        assert elapsed < 5 * 15 * 60

    def test_heart_rate(self, config: ExperimentConfig) -> None:
        table = run_experiment("hr", config, noise_levels=(0.1,))
        accuracy = _accuracy_by_stress(table)
        assert accuracy[73] >= 0.95, accuracy
        _assert_rising(table)

    def test_heart_rate_variability(self, config: ExperimentConfig) -> None:
        table = run_experiment("hrv", config, noise_levels=(0.1,))
        accuracy = _accuracy_by_stress(table)
        assert accuracy[4] >= 0.95, accuracy
        _assert_rising(table)
