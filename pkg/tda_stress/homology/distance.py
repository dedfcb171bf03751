"""Pairwise distance matrices of point clouds."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import pdist, squareform

from ..errors import EmptyCloud


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of pairwise distances with a zero diagonal."""

    entries: npt.NDArray[np.float64]

    def __post_init__(self) -> None:
        entries = self.entries
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"distance matrix must be square, got {entries.shape}")
        if np.any(np.diag(entries) != 0):
            raise ValueError("distance matrix must have a zero diagonal")
        if not np.array_equal(entries, entries.T):
            raise ValueError("distance matrix must be symmetric")
        if np.any(entries < 0):
            raise ValueError("distances must be nonnegative")

    @classmethod
    def from_points(
        cls, cloud: npt.ArrayLike, metric: str = "euclidean"
    ) -> "DistanceMatrix":
        """Distance matrix of a point cloud under a scipy ``pdist`` metric.

        Raises:
            EmptyCloud: If the cloud has no points
        """
        points = np.asarray(cloud, dtype=np.float64)
        if points.ndim == 1:
            points = points[:, np.newaxis]
        if points.shape[0] == 0:
            raise EmptyCloud("point cloud has no points")
        if not np.all(np.isfinite(points)):
            raise ValueError("point cloud coordinates must be finite")
        if points.shape[0] == 1:
            return cls(np.zeros((1, 1), dtype=np.float64))
        return cls(squareform(pdist(points, metric=metric)))

    @property
    def n(self) -> int:
        """Number of points."""
        return int(self.entries.shape[0])

    def enclosing_radius(self) -> float:
        """Smallest scale at which some point is within reach of every other.

        The Rips complex at this scale is a cone, so no class of dimension
        0 or 1 is alive past it.
        """
        return float(np.min(np.max(self.entries, axis=1)))
