"""0-dimensional persistence of the lower and upper level sets of a series."""

from typing import Literal

import numpy as np
import numpy.typing as npt

from ..errors import EmptySeries
from .models import DiagramKind, DiagramSource, PersistenceDiagram
from .union_find import UnionFind

Direction = Literal["lower", "upper"]


def level_set_persistence(
    x: npt.ArrayLike, direction: Direction = "lower"
) -> PersistenceDiagram:
    """H0 diagram of the sublevel (``lower``) or superlevel (``upper``) filtration.

    The series is the piecewise-linear function on the path graph of its
    indices. Runs of equal adjacent values are merged into one vertex first.
    Vertices enter in order of (value, index); when two components meet, the
    one born later dies (elder rule). The component of the global minimum is
    paired with the global maximum, so every series yields at least one
    interval. Upper diagrams are computed on the negated series and stored as
    (min, max) pairs, which keeps each lifetime.

    Raises:
        EmptySeries: If ``x`` is empty
    """
    series = np.asarray(x, dtype=np.float64)
    if series.ndim != 1 or series.size == 0:
        raise EmptySeries("level-set persistence needs a nonempty 1-D series")
    if not np.all(np.isfinite(series)):
        raise ValueError("series values must be finite")
    if direction not in ("lower", "upper"):
        raise ValueError(f"direction must be 'lower' or 'upper', got {direction!r}")

    if direction == "upper":
        pairs = -_sublevel_pairs(-series)
        pairs = np.sort(pairs, axis=1)
        kind = DiagramKind.UPPER_LEVEL_SET
    else:
        pairs = _sublevel_pairs(series)
        kind = DiagramKind.LOWER_LEVEL_SET
    return PersistenceDiagram.from_pairs(pairs, 0, DiagramSource(kind=kind))


def _sublevel_pairs(series: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    keep = np.ones(len(series), dtype=bool)
    keep[1:] = np.diff(series) != 0
    values = series[keep]
    n = len(values)

    components = UnionFind(n)
    active = np.zeros(n, dtype=bool)
    pairs: list[tuple[float, float]] = []
    for v in np.lexsort((np.arange(n), values)).tolist():
        value = float(values[v])
        roots = {
            components.find(u) for u in (v - 1, v + 1) if 0 <= u < n and active[u]
        }
        active[v] = True
        components.set_birth(v, value)
        if not roots:
            continue
        elder = min(roots, key=lambda r: components.births[r])
        components.merge(elder, v)
        for root in roots - {elder}:
            younger = components.merge(elder, root)
            if younger is not None:
                pairs.append((components.births[younger][0], value))

    pairs.append((float(values.min()), float(values.max())))
    return np.array(pairs, dtype=np.float64)
