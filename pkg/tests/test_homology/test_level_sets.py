"""Tests for level-set persistence of 1-D series."""

import time

import numpy as np
import pytest

from tda_stress.errors import EmptySeries
from tda_stress.homology.level_sets import level_set_persistence
from tda_stress.homology.models import DiagramKind

from .oracles import threshold_sweep_sublevel


def _pairs(series: list[float] | np.ndarray, direction: str) -> list:
    diagram = level_set_persistence(series, direction)  # type: ignore[arg-type]
    return sorted(map(tuple, diagram.pairs().tolist()))


def _upper_oracle(series: np.ndarray) -> list:
    flipped = [tuple(sorted((-b, -d))) for b, d in threshold_sweep_sublevel(-series)]
    return sorted(flipped)


PLATEAUS = [
    [1.0, 1.0, 1.0],
    [0.0, 2.0, 2.0, 0.0],
    [3.0, 3.0, 1.0, 1.0, 2.0, 2.0, 0.0],
    [0.0, 1.0, 0.0, 1.0, 0.0],
    [5.0],
    [2.0, 1.0, 1.0, 2.0, 1.0, 1.0, 2.0],
]


class TestLevelSetPersistence:
    """Test level_set_persistence function."""

    def test_lower_example(self) -> None:
        assert _pairs([0.0, 2.0, 1.0, 3.0], "lower") == [(0.0, 3.0), (1.0, 2.0)]

    def test_upper_example(self) -> None:
        """Test upper pairs are stored as (min, max) with the same lifetimes."""
        assert _pairs([0.0, 2.0, 1.0, 3.0], "upper") == [(0.0, 3.0), (1.0, 2.0)]

    def test_global_pair_always_present(self) -> None:
        """Test a monotone series yields the single (min, max) pair."""
        assert _pairs([1.0, 2.0, 3.0, 4.0], "lower") == [(1.0, 4.0)]
        assert _pairs([1.0, 2.0, 3.0, 4.0], "upper") == [(1.0, 4.0)]

    def test_constant_series(self) -> None:
        diagram = level_set_persistence([2.0, 2.0, 2.0])
        assert diagram.pairs().tolist() == [[2.0, 2.0]]
        assert diagram.lifetimes().tolist() == [0.0]

    def test_sources(self) -> None:
        lower = level_set_persistence([0.0, 1.0])
        upper = level_set_persistence([0.0, 1.0], "upper")
        assert lower.source.kind is DiagramKind.LOWER_LEVEL_SET
        assert upper.source.kind is DiagramKind.UPPER_LEVEL_SET
        assert (lower.source.label, upper.source.label) == ("lower", "upper")
        assert lower.dim == upper.dim == 0

    def test_empty_series(self) -> None:
        with pytest.raises(EmptySeries):
            level_set_persistence([])

    def test_unknown_direction(self) -> None:
        with pytest.raises(ValueError, match="direction"):
            level_set_persistence([1.0], "sideways")  # type: ignore[arg-type]

    @pytest.mark.parametrize("series", PLATEAUS)
    def test_plateaus_match_threshold_sweep(self, series: list[float]) -> None:
        values = np.array(series)
        assert _pairs(values, "lower") == threshold_sweep_sublevel(values)
        assert _pairs(values, "upper") == _upper_oracle(values)

    def test_random_series_match_threshold_sweep(self) -> None:
        """Test 200 random series, half of them integer-valued with ties."""
        rng = np.random.default_rng(99)
        started = time.perf_counter()
        for trial in range(200):
            length = int(rng.integers(1, 65))
            if trial % 2:
                values = rng.integers(0, 5, size=length).astype(float)
            else:
                values = rng.normal(size=length)
            assert _pairs(values, "lower") == threshold_sweep_sublevel(values)
            assert _pairs(values, "upper") == _upper_oracle(values)
        assert time.perf_counter() - started < 10.0
