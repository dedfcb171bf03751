"""Sliding subwindows and delay embeddings.

Both operations return read-only strided views of the input, so every
coordinate is the source sample itself.
"""

from fractions import Fraction

import numpy as np
import numpy.typing as npt
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import DimensionTooLarge, WindowTooLong
from ..utils.rate_parser import samples_for


def get_subwindows(
    x: npt.ArrayLike, fs: Fraction | int, length_s: float, shift_s: float
) -> npt.NDArray[np.float64]:
    """Cut ``x`` into subwindows of ``length_s`` seconds every ``shift_s`` seconds.

    Row i covers samples ``a .. a + length - 1`` with ``a = i * shift``; rows
    are produced while the last index stays inside ``x``, so the count is
    ``(L - length) // shift + 1``.

    Raises:
        WindowTooLong: If one subwindow needs more samples than ``x`` has
        ValueError: If a duration is not a whole number of samples
    """
    series = np.asarray(x, dtype=np.float64)
    rate = Fraction(fs)
    length = samples_for(length_s, rate)
    shift = samples_for(shift_s, rate)
    if length > len(series):
        raise WindowTooLong(
            f"subwindow of {length} samples does not fit a series of {len(series)}"
        )
    return sliding_window_view(series, length)[::shift]


def subwindow_count(n_samples: int, length: int, shift: int) -> int:
    """Number of subwindows of ``length`` samples every ``shift`` samples."""
    if length > n_samples:
        return 0
    return (n_samples - length) // shift + 1


def delay_embedding(
    x: npt.ArrayLike, dimension: int, point_shift: int = 1
) -> npt.NDArray[np.float64]:
    """Delay embedding of a subwindow into R^dimension.

    Point i is ``(x[s], ..., x[s + dimension - 1])`` with ``s = i * point_shift``.

    Raises:
        DimensionTooLarge: If ``dimension`` exceeds the subwindow length
        ValueError: If ``dimension < 2`` or ``point_shift < 1``
    """
    series = np.asarray(x, dtype=np.float64)
    if dimension < 2:
        raise ValueError(f"embedding dimension must be at least 2, got {dimension}")
    if point_shift < 1:
        raise ValueError(f"point_shift must be positive, got {point_shift}")
    if dimension > len(series):
        raise DimensionTooLarge(
            f"embedding dimension {dimension} exceeds subwindow length {len(series)}"
        )
    return sliding_window_view(series, dimension)[::point_shift]
