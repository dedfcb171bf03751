"""Tests for subwindowing, delay embeddings and window geometry."""

from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from tda_stress.errors import DimensionTooLarge, WindowTooLong
from tda_stress.signal.models import DelaySchedule, SignalRecord, WindowSpec
from tda_stress.signal.windows import delay_embedding, get_subwindows, subwindow_count


class TestGetSubwindows:
    """Test get_subwindows function."""

    def test_count_and_alignment(self) -> None:
        """Test row i starts at sample i * shift."""
        x = np.arange(100, dtype=float)
        rows = get_subwindows(x, Fraction(10), 4.0, 2.0)
        assert rows.shape == (subwindow_count(100, 40, 20), 40)
        assert rows.shape[0] == 4
        assert rows[1, 0] == 20.0
        assert rows[-1, -1] == 99.0

    def test_default_geometry_on_two_minutes(self) -> None:
        """Test 120 s at 50 Hz gives 59 subwindows of 200 samples."""
        rows = get_subwindows(np.zeros(6000), Fraction(50), 4.0, 2.0)
        assert rows.shape == (59, 200)

    def test_rows_are_views_of_the_input(self) -> None:
        x = np.random.default_rng(0).normal(size=50)
        rows = get_subwindows(x, 5, 2.0, 1.0)
        np.testing.assert_array_equal(rows[3], x[15:25])

    def test_rational_rate(self) -> None:
        """Test 2 s at 15.5 Hz is 31 samples."""
        rows = get_subwindows(np.arange(62.0), Fraction(31, 2), 2.0, 2.0)
        assert rows.shape == (2, 31)

    def test_too_long(self) -> None:
        with pytest.raises(WindowTooLong):
            get_subwindows(np.zeros(10), 10, 4.0, 2.0)

    def test_trailing_samples_are_dropped(self) -> None:
        rows = get_subwindows(np.arange(45.0), 10, 2.0, 2.0)
        assert rows.shape == (2, 20)
        assert rows[-1, -1] == 39.0


class TestDelayEmbedding:
    """Test delay_embedding function."""

    def test_points(self) -> None:
        cloud = delay_embedding(np.arange(6.0), 3)
        np.testing.assert_array_equal(
            cloud, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 5]]
        )

    def test_point_shift(self) -> None:
        cloud = delay_embedding(np.arange(7.0), 3, point_shift=2)
        np.testing.assert_array_equal(cloud, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])

    def test_full_length_gives_one_point(self) -> None:
        assert delay_embedding(np.arange(5.0), 5).shape == (1, 5)

    def test_dimension_too_large(self) -> None:
        with pytest.raises(DimensionTooLarge):
            delay_embedding(np.arange(5.0), 6)

    def test_dimension_below_two(self) -> None:
        with pytest.raises(ValueError):
            delay_embedding(np.arange(5.0), 1)


class TestWindowSpec:
    """Test WindowSpec validation and derived counts."""

    def test_defaults(self) -> None:
        spec = WindowSpec()
        assert spec.subwindows_per_window == 29

    def test_with_window(self) -> None:
        spec = WindowSpec().with_window(10.0)
        assert spec.subwindows_per_window == 4
        assert spec.subwindow_s == 4.0

    def test_subwindow_longer_than_window(self) -> None:
        with pytest.raises(ValidationError, match="must not exceed"):
            WindowSpec(window_s=2.0, subwindow_s=4.0)

    def test_shifts_must_match(self) -> None:
        with pytest.raises(ValidationError, match="window_shift_s"):
            WindowSpec(window_shift_s=4.0)

    def test_window_not_multiple_of_shift(self) -> None:
        with pytest.raises(ValidationError, match="whole multiple"):
            WindowSpec(window_s=61.0)


class TestDelaySchedule:
    """Test DelaySchedule dimensions and labels."""

    def test_default_dimensions(self) -> None:
        schedule = DelaySchedule()
        assert schedule.dimensions(Fraction(100)) == [50, 100, 150, 200]
        assert schedule.dimensions(Fraction(50)) == [25, 50, 75, 100]
        assert schedule.labels() == ["emb0.5", "emb1", "emb1.5", "emb2"]

    def test_half_rounds_up(self) -> None:
        """Test 0.5 * 15 Hz = 7.5 rounds to 8."""
        assert DelaySchedule(multipliers=["1/2"]).dimensions(Fraction(15)) == [8]

    def test_dimension_below_two(self) -> None:
        with pytest.raises(ValueError, match="at least 2"):
            DelaySchedule(multipliers=["1/2"]).dimensions(Fraction(2))

    def test_multipliers_serialize_as_strings(self) -> None:
        dumped = DelaySchedule(multipliers=[0.5, "3/2"]).model_dump(mode="json")
        assert dumped["multipliers"] == ["1/2", "3/2"]


class TestSignalRecord:
    """Test SignalRecord validation."""

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(ValidationError, match="finite"):
            SignalRecord(
                subject_id="S01",
                condition="baseline",
                sensor="resp",
                fs=10,
                samples=[0.0, np.nan],
            )

    def test_rejects_empty(self) -> None:
        with pytest.raises(ValidationError, match="nonempty"):
            SignalRecord(
                subject_id="S01", condition="baseline", sensor="resp", fs=10, samples=[]
            )

    def test_duration(self, sine_record: SignalRecord) -> None:
        assert sine_record.duration_s == 20.0
