"""Resampling by integer decimation or linear interpolation onto a common grid."""

import logging
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import numpy.typing as npt

from ..errors import NonCommensurateRates
from ..utils.rate_parser import (
    MAX_LCM_RATE,
    common_grid_rate,
    format_rate,
    parse_rate_input,
)
from .models import SignalRecord

logger = logging.getLogger(__name__)


def resample(
    record: SignalRecord,
    target_fs: Fraction | int | float | str,
    max_grid_rate: int = MAX_LCM_RATE,
) -> SignalRecord:
    """Resample a record to ``target_fs``.

    When the source rate is an integer multiple k of the target, every k-th
    sample is kept starting at index 0. Otherwise the series is linearly
    interpolated onto the common grid (the least common multiple of both
    rates) and that grid is decimated to the target rate. No anti-aliasing
    filter is applied.

    Args:
        record: Record to resample
        target_fs: Target rate in Hz
        max_grid_rate: Largest common grid rate accepted, in Hz

    Returns:
        Record at the target rate

    Raises:
        NonCommensurateRates: If the common grid exceeds ``max_grid_rate``
    """
    target = parse_rate_input(target_fs)
    source = record.fs
    if source == target:
        return record

    ratio = source / target
    if ratio.denominator == 1:
        step = ratio.numerator
        logger.debug(
            "Decimating %s/%s from %s Hz by %d",
            record.subject_id,
            record.sensor,
            format_rate(source),
            step,
        )
        return record.with_samples(record.samples[::step], target)

    grid = common_grid_rate(source, target)
    if grid > max_grid_rate:
        raise NonCommensurateRates(
            f"No integer path from {format_rate(source)} Hz to "
            f"{format_rate(target)} Hz: common grid {format_rate(grid)} Hz "
            f"exceeds the {max_grid_rate} Hz bound"
        )

    upsample = int(grid / source)
    decimate = int(grid / target)
    n_grid = (len(record.samples) - 1) * upsample + 1
    # Grid points kept by the decimation, expressed in source-sample units
    kept = np.arange(0, n_grid, decimate, dtype=np.float64) / upsample
    samples = np.interp(kept, np.arange(len(record.samples)), record.samples)
    logger.debug(
        "Resampled %s/%s %s Hz -> %s Hz via %s Hz grid (x%d, /%d)",
        record.subject_id,
        record.sensor,
        format_rate(source),
        format_rate(target),
        format_rate(grid),
        upsample,
        decimate,
    )
    return record.with_samples(samples, target)


def average_channels(channels: Sequence[npt.ArrayLike]) -> npt.NDArray[np.float64]:
    """Sample-wise mean of equally long channels (e.g. accelerometer axes).

    Raises:
        ValueError: If no channel is given or lengths differ
    """
    if not channels:
        raise ValueError("at least one channel is required")
    stacked = [np.asarray(c, dtype=np.float64) for c in channels]
    lengths = {len(c) for c in stacked}
    if len(lengths) != 1:
        raise ValueError(f"channels must have equal length, got {sorted(lengths)}")
    return np.mean(np.vstack(stacked), axis=0)
