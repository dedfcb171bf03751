"""Rolling mean and standard deviation of subwindow features."""

import numpy as np
import numpy.typing as npt

from ..errors import InsufficientSubwindows

# Steps between exact two-pass recomputations of the rolling moments
RESYNC_INTERVAL = 4096


def window_features(
    features: npt.ArrayLike, per_window: int
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Mean and population standard deviation over every run of ``per_window`` rows.

    ``features`` is either one feature sequence or a matrix with one row per
    subwindow and one column per feature. Window i aggregates rows
    ``i .. i + per_window - 1``. Each step updates the moments in constant
    time from the row entering and the row leaving the window:

        mu_i  = mu_{i-1} + (f_{i+M-1} - f_{i-1}) / M
        var_i = var_{i-1} + mu_{i-1}^2 - mu_i^2 + (f_{i+M-1}^2 - f_{i-1}^2) / M

    Every ``RESYNC_INTERVAL`` steps the moments are recomputed exactly.

    Args:
        features: Sequence (n,) or matrix (n, p) of subwindow features
        per_window: Number M of subwindows per window

    Returns:
        Tuple (mu, sigma) shaped (n - M + 1,) or (n - M + 1, p)

    Raises:
        InsufficientSubwindows: If fewer than ``per_window`` rows are given
    """
    values = np.asarray(features, dtype=np.float64)
    vector = values.ndim == 1
    if vector:
        values = values[:, np.newaxis]
    if per_window < 1:
        raise ValueError(f"per_window must be positive, got {per_window}")
    n_rows = values.shape[0]
    if n_rows < per_window:
        raise InsufficientSubwindows(
            f"{n_rows} subwindows cannot fill a window of {per_window}"
        )

    count = n_rows - per_window + 1
    mu = np.empty((count, values.shape[1]), dtype=np.float64)
    var = np.empty_like(mu)
    for i in range(count):
        if i % RESYNC_INTERVAL == 0:
            block = values[i : i + per_window]
            mu[i] = block.mean(axis=0)
            var[i] = np.mean((block - mu[i]) ** 2, axis=0)
            continue
        leaving = values[i - 1]
        entering = values[i + per_window - 1]
        mu[i] = mu[i - 1] + (entering - leaving) / per_window
        var[i] = (
            var[i - 1]
            + mu[i - 1] ** 2
            - mu[i] ** 2
            + (entering**2 - leaving**2) / per_window
        )

    sigma = np.sqrt(np.maximum(var, 0.0))
    if vector:
        return mu[:, 0], sigma[:, 0]
    return mu, sigma
