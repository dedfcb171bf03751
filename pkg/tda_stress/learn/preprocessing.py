"""Column pruning, min-max scaling, feature subsets and label tasks."""

import logging
import re
from collections.abc import Callable, Sequence

import numpy as np
import numpy.typing as npt
from sklearn.preprocessing import MinMaxScaler

from ..errors import AllColumnsDropped, InvalidConfig, InvalidLabels
from .models import FeatureColumn, Task

logger = logging.getLogger(__name__)

VARIANCE_FLOOR = 1e-12
CORRELATION_LIMIT = 0.9

_EMBEDDING_SUBSET = re.compile(r"^(emb[0-9.]+)(?:_h([01]))?$")


def prune_features(
    train: npt.ArrayLike, correlation_limit: float = CORRELATION_LIMIT
) -> npt.NDArray[np.bool_]:
    """Mask of training columns kept after dropping redundant ones.

    Columns with variance below ``VARIANCE_FLOOR`` go first. Among the rest,
    for every pair ``i < j`` whose absolute Pearson correlation exceeds
    ``correlation_limit`` the later column ``j`` is dropped.

    Raises:
        AllColumnsDropped: If no column survives
        ValueError: If fewer than two rows are given
    """
    values = np.asarray(train, dtype=np.float64)
    if values.ndim != 2 or values.shape[0] < 2:
        raise ValueError(f"pruning needs at least 2 rows, got shape {values.shape}")

    mask = values.var(axis=0) >= VARIANCE_FLOOR
    varying = np.flatnonzero(mask)
    if len(varying) > 1:
        corr = np.corrcoef(values[:, varying], rowvar=False)
        redundant = np.triu(np.abs(corr) > correlation_limit, k=1).any(axis=0)
        mask[varying[redundant]] = False

    if not mask.any():
        raise AllColumnsDropped(
            f"all {values.shape[1]} columns are constant or redundant"
        )
    logger.debug("Pruning kept %d of %d columns", int(mask.sum()), values.shape[1])
    return mask


def scale_features(
    train: npt.ArrayLike, test: npt.ArrayLike
) -> tuple[npt.NDArray[np.float64], npt.NDArray[np.float64]]:
    """Min-max scale both sets with the range of ``train``.

    Test values are clamped to [0, 1]; columns constant on train map to 0.
    """
    train_values = np.asarray(train, dtype=np.float64)
    test_values = np.asarray(test, dtype=np.float64)
    scaler = MinMaxScaler(clip=True).fit(train_values)
    degenerate = scaler.data_range_ == 0
    scaled_train = scaler.transform(train_values)
    scaled_test = scaler.transform(test_values)
    scaled_train[:, degenerate] = 0.0
    scaled_test[:, degenerate] = 0.0
    return scaled_train, scaled_test


def apply_task(
    conditions: npt.ArrayLike,
    task: Task,
    stress_labels: Sequence[str] = ("stress",),
) -> npt.NDArray[np.str_]:
    """Class labels for ``task``.

    ``multiclass`` keeps the conditions; ``binary`` maps ``stress_labels`` to
    ``stress`` and everything else to ``non_stress``.

    Raises:
        InvalidLabels: If the result has fewer than two classes
    """
    values = np.asarray(conditions, dtype=str)
    if task == "binary":
        values = np.where(np.isin(values, list(stress_labels)), "stress", "non_stress")
    elif task != "multiclass":
        raise InvalidConfig(f"Unknown task '{task}'")
    classes = np.unique(values)
    if len(classes) < 2:
        raise InvalidLabels(
            f"{task} task needs at least two classes, found {classes.tolist()}"
        )
    return values


def select_features(columns: Sequence[FeatureColumn], subset: str) -> list[int]:
    """Indices of the columns in a named subset.

    Subsets: ``all``, ``level_sets``, ``upper``, ``lower``, ``embedding``,
    ``emb<m>``, ``emb<m>_h0``, ``emb<m>_h1``, each optionally prefixed with
    ``<sensor>:`` to restrict it to one sensor.

    Raises:
        InvalidConfig: If the subset name is unknown or selects nothing
    """
    sensor, _, name = subset.rpartition(":")
    matches = _subset_predicate(name)
    selected = [
        c.index
        for c in columns
        if (not sensor or c.sensor == sensor) and matches(c)
    ]
    if not selected:
        raise InvalidConfig(f"Feature subset '{subset}' selects no columns")
    return selected


def _subset_predicate(name: str) -> Callable[[FeatureColumn], bool]:
    if name == "all":
        return lambda c: True
    if name == "level_sets":
        return lambda c: c.source in ("upper", "lower")
    if name in ("upper", "lower"):
        return lambda c: c.source == name
    if name == "embedding":
        return lambda c: c.source.startswith("emb")
    found = _EMBEDDING_SUBSET.match(name)
    if found is None:
        raise InvalidConfig(
            f"Unknown feature subset '{name}'. Valid subsets: all, level_sets, "
            "upper, lower, embedding, emb<m>, emb<m>_h0, emb<m>_h1"
        )
    source, dim = found.group(1), found.group(2)
    if dim is None:
        return lambda c: c.source == source
    return lambda c: c.source == source and c.dim == int(dim)
