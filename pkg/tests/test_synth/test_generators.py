"""Tests for the synthetic signal generators."""

from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError
from scipy.signal import periodogram

from tda_stress.synth.generators import (
    gen_ecg,
    gen_resp,
    generate_corpus,
    pqrst_template,
    template_peak,
)
from tda_stress.synth.models import SignalParams, SynthSpec


def _rising_edges(x: np.ndarray, level: float) -> np.ndarray:
    above = x > level
    return np.flatnonzero(above[1:] & ~above[:-1]) + 1


class TestGenResp:
    """Test gen_resp function."""

    def test_default_shape(self) -> None:
        baseline, stress = gen_resp(SynthSpec())
        assert len(baseline.samples) == len(stress.samples) == 6000
        assert baseline.fs == Fraction(50)
        assert (baseline.condition, stress.condition) == ("baseline", "stress")
        assert baseline.sensor == "resp"

    def test_zero_crossings_match_rate(self) -> None:
        """Test 15 rpm over 120 s crosses zero about 60 times."""
        baseline, _ = gen_resp(SynthSpec(noise=0.0))
        signs = np.signbit(baseline.samples)
        crossings = int(np.count_nonzero(signs[1:] != signs[:-1]))
        assert 59 <= crossings <= 61

    def test_periodogram_peak(self) -> None:
        """Test the 18 rpm stress signal peaks at 0.30 Hz."""
        _, stress = gen_resp(SynthSpec(noise=0.1))
        freqs, power = periodogram(stress.samples, fs=50.0)
        assert freqs[np.argmax(power)] == pytest.approx(0.30, abs=1 / 120)

    def test_noise_level(self) -> None:
        spec = SynthSpec(noise=0.3)
        noisy, _ = gen_resp(spec)
        clean, _ = gen_resp(spec.model_copy(update={"noise": 0.0}))
        residual = noisy.samples - clean.samples
        assert np.std(residual) == pytest.approx(0.3, rel=0.1)

    def test_deterministic_per_subject(self) -> None:
        spec = SynthSpec(seed=11)
        first, _ = gen_resp(spec, subject=3)
        again, _ = gen_resp(spec, subject=3)
        other, _ = gen_resp(spec, subject=4)
        np.testing.assert_array_equal(first.samples, again.samples)
        assert not np.array_equal(first.samples, other.samples)
        assert first.subject_id == "S04"


class TestGenEcg:
    """Test gen_ecg function."""

    def test_beat_count_and_spacing(self) -> None:
        """Test 70 bpm over 120 s gives about 140 beats 60/70 s apart."""
        spec = SynthSpec(signal="ecg", noise=0.0)
        baseline, stress = gen_ecg(spec)
        t = np.arange(6000) / 50.0
        beats = t[_rising_edges(baseline.samples, 0.5)]
        assert 135 <= len(beats) <= 145
        assert np.mean(np.diff(beats)) == pytest.approx(60 / 70, abs=0.02)
        stress_beats = t[_rising_edges(stress.samples, 0.5)]
        assert np.mean(np.diff(stress_beats)) == pytest.approx(60 / 73, abs=0.02)

    def test_heart_rate_spread(self) -> None:
        """Test a larger rate spread gives more variable beat intervals."""
        spec = SynthSpec(
            signal="ecg",
            noise=0.0,
            baseline=SignalParams(hr_bpm=70, hr_sd_bpm=1),
            stress=SignalParams(hr_bpm=70, hr_sd_bpm=5),
        )
        baseline, stress = gen_ecg(spec)
        calm = np.diff(_rising_edges(baseline.samples, 0.5))
        spread = np.diff(_rising_edges(stress.samples, 0.5))
        assert np.std(spread) > np.std(calm)

    def test_noise_is_relative_to_template_peak(self) -> None:
        spec = SynthSpec(signal="ecg", noise=0.2)
        noisy, _ = gen_ecg(spec)
        clean, _ = gen_ecg(spec.model_copy(update={"noise": 0.0}))
        residual = noisy.samples - clean.samples
        assert np.std(residual) == pytest.approx(0.2 * template_peak(), rel=0.1)

    def test_template(self) -> None:
        assert template_peak() == pytest.approx(1.0, abs=0.01)
        assert pqrst_template([0.0])[0] == pytest.approx(1.0, abs=0.01)
        assert abs(pqrst_template([2.0])[0]) < 1e-12


class TestGenerateCorpus:
    """Test generate_corpus function."""

    def test_layout(self, tiny_spec: SynthSpec) -> None:
        records = generate_corpus(tiny_spec)
        assert len(records) == 6
        subjects = [r.subject_id for r in records]
        assert subjects == ["S01", "S01", "S02", "S02", "S03", "S03"]
        assert [r.condition for r in records[:2]] == ["baseline", "stress"]
        assert all(len(r.samples) == 200 for r in records)

    def test_reproducible(self, tiny_spec: SynthSpec) -> None:
        first = generate_corpus(tiny_spec)
        second = generate_corpus(tiny_spec)
        for a, b in zip(first, second, strict=True):
            np.testing.assert_array_equal(a.samples, b.samples)

    def test_spec_validation(self) -> None:
        with pytest.raises(ValidationError):
            SynthSpec(n_subjects=0)
        with pytest.raises(ValidationError):
            SynthSpec(noise=-0.1)
        with pytest.raises(ValidationError):
            SignalParams(rpm=0)

    def test_rational_rate_serializes(self) -> None:
        spec = SynthSpec(fs="31/2", duration_s=2.0)
        assert spec.model_dump(mode="json")["fs"] == "31/2"
        assert len(gen_resp(spec)[0].samples) == 31
