"""Synthetic respiration and ECG generators.

Each subject draws from its own generator seeded with ``seed + subject index``,
so corpora are reproducible subject by subject regardless of generation order.
"""

import logging
import math

import numpy as np
import numpy.typing as npt

from ..signal.models import SignalRecord
from ..utils.rate_parser import samples_for
from .models import SignalParams, SynthSpec

logger = logging.getLogger(__name__)

CONDITIONS = ("baseline", "stress")

# Beat-rate truncation bounds in beats per minute
MIN_HR_BPM = 30.0
MAX_HR_BPM = 220.0

# PQRST template: (offset from the R peak in s, amplitude, Gaussian width in s)
PQRST_WAVES: tuple[tuple[float, float, float], ...] = (
    (-0.20, 0.15, 0.025),  # P
    (-0.04, -0.15, 0.010),  # Q
    (0.00, 1.00, 0.012),  # R
    (0.04, -0.25, 0.012),  # S
    (0.28, 0.30, 0.050),  # T
)
# Samples further than this from the R peak are left untouched by a beat
_TEMPLATE_REACH_S = 0.5


def pqrst_template(t: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """One beat evaluated at times ``t`` relative to its R peak."""
    at = np.asarray(t, dtype=np.float64)
    wave = np.zeros_like(at)
    for offset, amplitude, width in PQRST_WAVES:
        wave += amplitude * np.exp(-0.5 * ((at - offset) / width) ** 2)
    return wave


def template_peak() -> float:
    """Largest absolute value of the beat template."""
    grid = np.linspace(-_TEMPLATE_REACH_S, _TEMPLATE_REACH_S, 10_001)
    return float(np.max(np.abs(pqrst_template(grid))))


def gen_resp(
    spec: SynthSpec, subject: int = 0
) -> tuple[SignalRecord, SignalRecord]:
    """Baseline and stress respiration of one subject.

    ``sin(2 pi rpm/60 t + phi) + noise * eps`` with one phase phi per subject
    and i.i.d. standard Gaussian eps.
    """
    rng = np.random.default_rng(spec.seed + subject)
    t = _time_axis(spec)
    phase = rng.uniform(0.0, 2.0 * math.pi)
    records = []
    for condition, params in zip(CONDITIONS, (spec.baseline, spec.stress), strict=True):
        clean = np.sin(2.0 * math.pi * (params.rpm / 60.0) * t + phase)
        noisy = clean + spec.noise * rng.standard_normal(len(t))
        records.append(_record(spec, subject, condition, "resp", noisy))
    return records[0], records[1]


def gen_ecg(
    spec: SynthSpec, subject: int = 0
) -> tuple[SignalRecord, SignalRecord]:
    """Baseline and stress ECG of one subject.

    Beats follow each other at intervals ``60 / r`` seconds with r drawn per
    beat from a normal distribution truncated to [30, 220] bpm. Every beat
    adds the PQRST template; Gaussian noise is scaled by ``noise`` times the
    template peak.
    """
    rng = np.random.default_rng(spec.seed + subject)
    t = _time_axis(spec)
    peak = template_peak()
    records = []
    for condition, params in zip(CONDITIONS, (spec.baseline, spec.stress), strict=True):
        beats = beat_times(params, spec.duration_s, rng)
        clean = render_beats(t, beats)
        noisy = clean + spec.noise * peak * rng.standard_normal(len(t))
        records.append(_record(spec, subject, condition, "ecg", noisy))
    return records[0], records[1]


def beat_times(
    params: SignalParams, duration_s: float, rng: np.random.Generator
) -> npt.NDArray[np.float64]:
    """R-peak times covering ``[0, duration_s]``; the first beat falls in the
    first interval at a uniformly drawn phase."""
    times = []
    now = -rng.uniform(0.0, 60.0 / params.hr_bpm)
    while now <= duration_s + _TEMPLATE_REACH_S:
        rate = _truncated_rate(params, rng)
        now += 60.0 / rate
        times.append(now)
    return np.array(times, dtype=np.float64)


def render_beats(
    t: npt.NDArray[np.float64], beats: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    """Sum of one template per beat on the sample grid ``t``."""
    signal = np.zeros_like(t)
    lo = np.searchsorted(t, beats - _TEMPLATE_REACH_S, side="left")
    hi = np.searchsorted(t, beats + _TEMPLATE_REACH_S, side="right")
    for beat, start, stop in zip(beats, lo, hi, strict=True):
        if stop > start:
            signal[start:stop] += pqrst_template(t[start:stop] - beat)
    return signal


def generate_subject(
    spec: SynthSpec, subject: int
) -> tuple[SignalRecord, SignalRecord]:
    """(baseline, stress) records of subject ``subject`` for the spec's signal."""
    if spec.signal == "resp":
        return gen_resp(spec, subject)
    return gen_ecg(spec, subject)


def generate_corpus(spec: SynthSpec) -> list[SignalRecord]:
    """All records of the corpus, grouped by subject, baseline first."""
    records: list[SignalRecord] = []
    for subject in range(spec.n_subjects):
        records.extend(generate_subject(spec, subject))
    logger.info(
        "Generated %d %s records for %d subjects (%.0f s per condition)",
        len(records),
        spec.signal,
        spec.n_subjects,
        spec.duration_s,
    )
    return records


def _truncated_rate(params: SignalParams, rng: np.random.Generator) -> float:
    while True:
        rate = float(rng.normal(params.hr_bpm, params.hr_sd_bpm))
        if MIN_HR_BPM <= rate <= MAX_HR_BPM:
            return rate


def _time_axis(spec: SynthSpec) -> npt.NDArray[np.float64]:
    n = samples_for(spec.duration_s, spec.fs)
    return np.arange(n, dtype=np.float64) / float(spec.fs)


def _record(
    spec: SynthSpec,
    subject: int,
    condition: str,
    sensor: str,
    samples: npt.NDArray[np.float64],
) -> SignalRecord:
    return SignalRecord(
        subject_id=spec.subject_ids()[subject],
        condition=condition,
        sensor=sensor,
        fs=spec.fs,
        samples=samples,
    )
