"""Persistence intervals and diagrams."""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np
import numpy.typing as npt


class DiagramKind(str, Enum):
    """Filtration a diagram was computed from."""

    RIPS_EMBEDDING = "rips_embedding"
    UPPER_LEVEL_SET = "upper_level_set"
    LOWER_LEVEL_SET = "lower_level_set"


@dataclass(frozen=True)
class DiagramSource:
    """Where a diagram came from: a level set or the Rips filtration of an embedding."""

    kind: DiagramKind
    multiplier: Fraction | None = None

    @property
    def label(self) -> str:
        """Short name used in feature columns (``upper``, ``lower``, ``emb0.5``)."""
        if self.kind is DiagramKind.UPPER_LEVEL_SET:
            return "upper"
        if self.kind is DiagramKind.LOWER_LEVEL_SET:
            return "lower"
        return f"emb{float(self.multiplier or 0):g}"


@dataclass(frozen=True)
class PersistenceInterval:
    """A (birth, death) pair of one homology class."""

    birth: float
    death: float
    dim: int
    essential: bool = False

    def __post_init__(self) -> None:
        if self.dim not in (0, 1):
            raise ValueError(f"homology dimension must be 0 or 1, got {self.dim}")
        if not self.essential and self.death < self.birth:
            raise ValueError(
                f"death {self.death} precedes birth {self.birth} in a finite interval"
            )

    @property
    def lifetime(self) -> float:
        """Death minus birth; infinite for essential classes."""
        if self.essential:
            return math.inf
        return self.death - self.birth


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of intervals of one homology dimension.

    Essential classes are kept on the diagram for reference but are never part
    of ``pairs()``, which is what feature computation consumes.
    """

    dim: int
    source: DiagramSource
    intervals: tuple[PersistenceInterval, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        for interval in self.intervals:
            if interval.dim != self.dim:
                raise ValueError(
                    f"interval of dimension {interval.dim} in a "
                    f"dimension-{self.dim} diagram"
                )

    @classmethod
    def from_pairs(
        cls,
        pairs: npt.ArrayLike,
        dim: int,
        source: DiagramSource,
        essential_births: list[float] | None = None,
    ) -> "PersistenceDiagram":
        """Build a diagram from an (n, 2) array of finite (birth, death) pairs."""
        rows = np.asarray(pairs, dtype=np.float64).reshape(-1, 2)
        intervals = [
            PersistenceInterval(birth=float(b), death=float(d), dim=dim)
            for b, d in rows
        ]
        intervals.extend(
            PersistenceInterval(birth=b, death=math.inf, dim=dim, essential=True)
            for b in essential_births or []
        )
        return cls(dim=dim, source=source, intervals=tuple(intervals))

    def pairs(self) -> npt.NDArray[np.float64]:
        """Finite intervals as an (n, 2) array of (birth, death)."""
        finite = [(i.birth, i.death) for i in self.intervals if not i.essential]
        if not finite:
            return np.empty((0, 2), dtype=np.float64)
        return np.array(finite, dtype=np.float64)

    def lifetimes(self) -> npt.NDArray[np.float64]:
        """Lifetimes of the finite intervals."""
        pairs = self.pairs()
        return pairs[:, 1] - pairs[:, 0]

    @property
    def essential(self) -> list[PersistenceInterval]:
        """Classes that never die within the filtration."""
        return [i for i in self.intervals if i.essential]

    @property
    def is_empty(self) -> bool:
        """True when the diagram has no finite interval."""
        return all(i.essential for i in self.intervals)

    def __len__(self) -> int:
        return sum(1 for i in self.intervals if not i.essential)
