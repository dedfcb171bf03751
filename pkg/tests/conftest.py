"""Test configuration and fixtures."""

from fractions import Fraction

import numpy as np
import pytest

from tda_stress.learn.models import FeatureColumn, WindowFeatureMatrix
from tda_stress.signal.models import SignalRecord
from tda_stress.synth.models import SignalParams, SynthSpec


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for reproducible random inputs."""
    return np.random.default_rng(12345)


def make_columns(n: int, sensor: str = "resp") -> list[FeatureColumn]:
    """Feature columns with distinct names and a rotating embedding source."""
    sources = ["upper", "lower", "emb0.5", "emb1"]
    return [
        FeatureColumn(
            index=i,
            name=f"{sensor}__f{i}",
            sensor=sensor,
            source=sources[i % len(sources)],
            dim=1 if i % 2 and i % 4 > 1 else 0,
            feature="w1",
            statistic="mean",
        )
        for i in range(n)
    ]


def make_matrix(
    rng: np.random.Generator,
    n_subjects: int = 4,
    n_windows: int = 12,
    n_features: int = 6,
    separation: float = 3.0,
    conditions: tuple[str, ...] = ("baseline", "stress"),
) -> WindowFeatureMatrix:
    """Well-separated Gaussian classes; rows grouped by subject then condition.

    Windows of a block are 2 s apart and 10 s long.
    """
    values, labels, subjects, times = [], [], [], []
    for s in range(n_subjects):
        for c, condition in enumerate(conditions):
            block = rng.normal(size=(n_windows, n_features))
            block[:, c % n_features] += separation
            values.append(block)
            labels.extend([condition] * n_windows)
            subjects.extend([f"S{s + 1:02d}"] * n_windows)
            starts = np.arange(n_windows) * 2.0
            times.append(np.column_stack([starts, starts + 10.0]))
    return WindowFeatureMatrix(
        values=np.vstack(values),
        columns=make_columns(n_features),
        labels=np.array(labels),
        subjects=np.array(subjects),
        window_times=np.vstack(times),
    )


@pytest.fixture
def separable_matrix(rng: np.random.Generator) -> WindowFeatureMatrix:
    return make_matrix(rng)


@pytest.fixture
def sine_record() -> SignalRecord:
    """20 s of a 0.25 Hz sine at 10 Hz."""
    t = np.arange(200) / 10.0
    return SignalRecord(
        subject_id="S01",
        condition="baseline",
        sensor="resp",
        fs=Fraction(10),
        samples=np.sin(2 * np.pi * 0.25 * t),
    )


@pytest.fixture
def tiny_spec() -> SynthSpec:
    """Small RESP corpus: 3 subjects of 20 s at 10 Hz."""
    return SynthSpec(
        n_subjects=3,
        duration_s=20.0,
        fs=Fraction(10),
        signal="resp",
        baseline=SignalParams(rpm=15),
        stress=SignalParams(rpm=30),
        noise=0.05,
        seed=7,
    )
