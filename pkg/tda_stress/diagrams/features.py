"""Stable features of a single persistence diagram.

All norms are integrated exactly over the breakpoints of the piecewise
constant Betti curve and the piecewise linear first landscape layer.
"""

import math
from dataclasses import astuple, dataclass, fields

import numpy as np
import numpy.typing as npt

from ..homology.models import PersistenceDiagram

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class DiagramFeatures:
    """The seven features of one diagram, in output order."""

    w1: float = 0.0
    w_inf: float = 0.0
    entropy: float = 0.0
    betti_l1: float = 0.0
    betti_l2: float = 0.0
    landscape_l1: float = 0.0
    landscape_l2: float = 0.0

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array(astuple(self), dtype=np.float64)


FEATURE_NAMES: tuple[str, ...] = tuple(f.name for f in fields(DiagramFeatures))


def get_features(diagram: PersistenceDiagram | npt.ArrayLike) -> DiagramFeatures:
    """Wasserstein/bottleneck distance to the empty diagram, persistent entropy,
    and L1/L2 norms of the Betti curve and the first landscape layer.

    Essential intervals are ignored. A diagram without positive lifetimes maps
    to seven zeros.
    """
    if isinstance(diagram, PersistenceDiagram):
        pairs = diagram.pairs()
    else:
        pairs = np.asarray(diagram, dtype=np.float64).reshape(-1, 2)
    lifetimes = pairs[:, 1] - pairs[:, 0]
    positive = lifetimes > 0
    pairs, lifetimes = pairs[positive], lifetimes[positive]
    if len(lifetimes) == 0:
        return DiagramFeatures()

    total = float(lifetimes.sum())
    p = lifetimes / total
    return DiagramFeatures(
        w1=total / SQRT2,
        w_inf=float(lifetimes.max()) / SQRT2,
        entropy=max(0.0, float(-np.sum(p * np.log(p)))),
        betti_l1=total,
        betti_l2=math.sqrt(_betti_squared_integral(pairs)),
        landscape_l1=_landscape_integral(pairs, power=1),
        landscape_l2=math.sqrt(_landscape_integral(pairs, power=2)),
    )


def betti_curve(
    pairs: npt.NDArray[np.float64], x: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    """Number of intervals alive at each scale in ``x``."""
    at = np.asarray(x, dtype=np.float64)
    births = np.sort(pairs[:, 0])
    deaths = np.sort(pairs[:, 1])
    alive = np.searchsorted(births, at, side="right") - np.searchsorted(
        deaths, at, side="right"
    )
    return alive.astype(np.float64)


def landscape(
    pairs: npt.NDArray[np.float64], x: npt.ArrayLike
) -> npt.NDArray[np.float64]:
    """First landscape layer: pointwise maximum of the interval tents."""
    at = np.asarray(x, dtype=np.float64)
    if len(pairs) == 0:
        return np.zeros_like(at)
    tents = np.minimum(
        at[np.newaxis, :] - pairs[:, 0, np.newaxis],
        pairs[:, 1, np.newaxis] - at[np.newaxis, :],
    )
    return np.maximum(tents.max(axis=0), 0.0)


def _betti_squared_integral(pairs: npt.NDArray[np.float64]) -> float:
    points = np.unique(pairs.ravel())
    heights = betti_curve(pairs, points[:-1])
    return float(np.sum(heights**2 * np.diff(points)))


def _undominated(pairs: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    """Intervals whose tent is not contained in another one's.

    The survivors have strictly increasing births and deaths, so on the upper
    envelope each tent can only meet its neighbours.
    """
    order = np.lexsort((-pairs[:, 1], pairs[:, 0]))
    kept = []
    reach = -math.inf
    for b, d in pairs[order]:
        if d > reach:
            kept.append((b, d))
            reach = d
    return np.array(kept, dtype=np.float64)


def _landscape_integral(pairs: npt.NDArray[np.float64], power: int) -> float:
    tents = _undominated(pairs)
    births, deaths = tents[:, 0], tents[:, 1]
    crossings = (births[1:] + deaths[:-1]) / 2
    knots = np.unique(
        np.concatenate([births, deaths, (births + deaths) / 2, crossings])
    )
    heights = landscape(tents, knots)
    width = np.diff(knots)
    left, right = heights[:-1], heights[1:]
    if power == 1:
        return float(np.sum(width * (left + right) / 2))
    return float(np.sum(width * (left**2 + left * right + right**2) / 3))
