"""Vietoris-Rips persistence in dimensions 0 and 1.

H0 comes from Kruskal's algorithm: the deaths are the edge lengths of a
minimum spanning tree. H1 comes from reducing the coboundary matrix of the
edges over Z/2, which yields the same pairs as reducing the boundary matrix
of the triangles. Edges that already killed an H0 class are cleared (skipped)
and the filtration stops at the enclosing radius, past which the complex is
a cone. Simplices are totally ordered by (filtration value, dimension,
lexicographic vertex tuple).

The smallest coface of every edge is found for all edges at once; only
columns whose pivot is already taken are materialized and reduced.
"""

import logging
import math
from typing import Literal

import numpy as np
import numpy.typing as npt

from ..errors import EmptyCloud, InvalidConfig
from .distance import DistanceMatrix
from .models import DiagramKind, DiagramSource, PersistenceDiagram
from .union_find import UnionFind

logger = logging.getLogger(__name__)

RipsBackend = Literal["native", "ripser"]

_DEFAULT_SOURCE = DiagramSource(kind=DiagramKind.RIPS_EMBEDDING)


def rips_persistence(
    cloud: npt.ArrayLike | DistanceMatrix,
    max_dim: int = 1,
    source: DiagramSource = _DEFAULT_SOURCE,
    backend: RipsBackend = "native",
) -> list[PersistenceDiagram]:
    """H0 and H1 diagrams of the Rips filtration of a point cloud.

    Zero-lifetime pairs are dropped. The single essential H0 class is kept
    on the H0 diagram with ``essential=True``.

    Args:
        cloud: (n, d) point cloud, or a precomputed distance matrix
        max_dim: Highest homology dimension; only 1 is supported
        source: Provenance recorded on both diagrams
        backend: ``"native"`` (exact reduction) or ``"ripser"``

    Returns:
        [H0 diagram, H1 diagram]

    Raises:
        EmptyCloud: If the cloud has no points
        InvalidConfig: If the ripser backend is requested but not installed
    """
    if max_dim != 1:
        raise ValueError(f"only max_dim=1 is supported, got {max_dim}")

    if isinstance(cloud, DistanceMatrix):
        distances = cloud
    else:
        points = np.asarray(cloud, dtype=np.float64)
        if points.size == 0:
            raise EmptyCloud("point cloud has no points")
        distances = DistanceMatrix.from_points(points)

    if backend == "ripser":
        return _ripser_persistence(distances, source)
    if backend != "native":
        raise InvalidConfig(f"Unknown Rips backend '{backend}'")

    h0_pairs, spanning_edges = _h0_kruskal(distances.entries)
    h1_pairs = _h1_cohomology(distances, spanning_edges)
    return [
        PersistenceDiagram.from_pairs(h0_pairs, 0, source, essential_births=[0.0]),
        PersistenceDiagram.from_pairs(h1_pairs, 1, source),
    ]


def _sorted_edges(
    entries: npt.NDArray[np.float64], threshold: float = math.inf
) -> tuple[npt.NDArray[np.intp], npt.NDArray[np.intp], npt.NDArray[np.float64]]:
    """Edges (i < j) with length <= threshold, ordered by (length, i, j)."""
    rows, cols = np.triu_indices(entries.shape[0], k=1)
    lengths = entries[rows, cols]
    keep = lengths <= threshold
    rows, cols, lengths = rows[keep], cols[keep], lengths[keep]
    order = np.lexsort((cols, rows, lengths))
    return rows[order], cols[order], lengths[order]


def _h0_kruskal(
    entries: npt.NDArray[np.float64],
) -> tuple[list[tuple[float, float]], set[tuple[int, int]]]:
    n = entries.shape[0]
    components = UnionFind(n)
    pairs: list[tuple[float, float]] = []
    spanning: set[tuple[int, int]] = set()
    rows, cols, lengths = _sorted_edges(entries)
    edges = zip(rows.tolist(), cols.tolist(), lengths.tolist(), strict=True)
    for i, j, length in edges:
        if components.merge(i, j) is None:
            continue
        spanning.add((i, j))
        if length > 0:
            pairs.append((0.0, length))
        if len(spanning) == n - 1:
            break
    return pairs, spanning


_ABSENT = np.iinfo(np.int64).max
# Coboundary keys held in memory at once
_CHUNK_ELEMENTS = 1 << 20


class _Coboundaries:
    """Coboundary columns of edges, encoded as sorted int64 triangle keys.

    A triangle's diameter is one of the edge lengths, so its key is
    ``level * n**3 + lexicographic id`` where ``level`` is the rank of the
    diameter among the distinct lengths. Integer order is filtration order.
    """

    def __init__(
        self,
        entries: npt.NDArray[np.float64],
        lengths: npt.NDArray[np.float64],
    ):
        n = entries.shape[0]
        self.levels = np.unique(lengths)
        self.n = n
        self.cube = n**3
        if (len(self.levels) + 1) * self.cube >= _ABSENT:
            raise ValueError(f"{n} points exceed the native Rips backend")
        # Entries past the threshold rank past every level
        self.level_of = np.searchsorted(self.levels, entries).astype(np.int64)
        self.n_levels = len(self.levels)
        self.vertices = np.arange(n, dtype=np.int64)

    def keys(
        self, rows: npt.NDArray[np.intp], cols: npt.NDArray[np.intp]
    ) -> npt.NDArray[np.int64]:
        """(edges, n) keys of the cofaces; missing cofaces are ``_ABSENT``."""
        i = rows.astype(np.int64)[:, np.newaxis]
        j = cols.astype(np.int64)[:, np.newaxis]
        k = self.vertices[np.newaxis, :]
        level = np.maximum(self.level_of[rows], self.level_of[cols])
        level = np.maximum(level, self.level_of[rows, cols][:, np.newaxis])
        lo = np.minimum(i, k)
        hi = np.maximum(j, k)
        mid = i + j + k - lo - hi
        keys = level * self.cube + (lo * self.n + mid) * self.n + hi
        absent = (k == i) | (k == j) | (level >= self.n_levels)
        keys[absent] = _ABSENT
        return keys

    def pivots(
        self, rows: npt.NDArray[np.intp], cols: npt.NDArray[np.intp]
    ) -> npt.NDArray[np.int64]:
        """Smallest coface key of every edge."""
        out = np.empty(len(rows), dtype=np.int64)
        step = max(1, _CHUNK_ELEMENTS // self.n)
        for start in range(0, len(rows), step):
            stop = start + step
            out[start:stop] = self.keys(rows[start:stop], cols[start:stop]).min(axis=1)
        return out

    def column(self, row: int, col: int) -> npt.NDArray[np.int64]:
        keys = self.keys(np.array([row]), np.array([col]))[0]
        return np.sort(keys[keys != _ABSENT])

    def diameter(self, key: int) -> float:
        return float(self.levels[key // self.cube])


def _h1_cohomology(
    distances: DistanceMatrix, spanning: set[tuple[int, int]]
) -> list[tuple[float, float]]:
    n = distances.n
    if n < 3:
        return []
    entries = distances.entries
    threshold = distances.enclosing_radius()
    rows, cols, lengths = _sorted_edges(entries, threshold)
    if len(lengths) == 0:
        return []

    cofaces = _Coboundaries(entries, lengths)
    cleared = np.array(
        [(i, j) in spanning for i, j in zip(rows.tolist(), cols.tolist(), strict=True)],
        dtype=bool,
    )
    # Reverse filtration order over the edges that survive clearing
    order = np.flatnonzero(~cleared)[::-1]
    rows, cols, lengths = rows[order], cols[order], lengths[order]
    pivots = cofaces.pivots(rows, cols).tolist()

    owners: dict[int, int] = {}
    columns: dict[int, npt.NDArray[np.int64]] = {}

    def column_of(edge: int) -> npt.NDArray[np.int64]:
        cached = columns.get(edge)
        if cached is None:
            cached = cofaces.column(int(rows[edge]), int(cols[edge]))
            columns[edge] = cached
        return cached

    pairs: list[tuple[float, float]] = []
    unpaired = 0
    for edge, pivot in enumerate(pivots):
        if pivot == _ABSENT:
            unpaired += 1
            continue
        if pivot in owners:
            column = column_of(edge)
            while pivot in owners:
                column = np.setxor1d(
                    column, column_of(owners[pivot]), assume_unique=True
                )
                if len(column) == 0:
                    break
                pivot = int(column[0])
            if len(column) == 0:
                unpaired += 1
                continue
            columns[edge] = column
        owners[pivot] = edge
        birth = float(lengths[edge])
        death = cofaces.diameter(pivot)
        if death > birth:
            pairs.append((birth, death))

    if unpaired:
        logger.debug(
            "%d H1 cocycles left unpaired below the enclosing radius", unpaired
        )
    return pairs


def _ripser_persistence(
    distances: DistanceMatrix, source: DiagramSource
) -> list[PersistenceDiagram]:
    try:
        from ripser import ripser
    except ImportError:
        raise InvalidConfig(
            "The 'ripser' backend needs the optional dependency: "
            "pip install 'tda-stress[fast]'"
        ) from None

    result = ripser(distances.entries, maxdim=1, coeff=2, distance_matrix=True)
    diagrams = []
    for dim, dgm in enumerate(result["dgms"]):
        dgm = np.asarray(dgm, dtype=np.float64)
        finite = np.isfinite(dgm[:, 1])
        kept = dgm[finite]
        kept = kept[kept[:, 1] > kept[:, 0]]
        diagrams.append(
            PersistenceDiagram.from_pairs(
                kept,
                dim,
                source,
                essential_births=[float(b) for b in dgm[~finite, 0]],
            )
        )
    return diagrams
