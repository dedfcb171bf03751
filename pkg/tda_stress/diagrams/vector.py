"""Assembly of the per-subwindow feature vector and its column schema."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from ..errors import WrongDiagramCount
from ..homology.models import PersistenceDiagram
from ..homology.subwindow import diagram_slots
from ..signal.models import DelaySchedule
from .features import FEATURE_NAMES, get_features

DIAGRAMS_PER_SUBWINDOW = 10


@dataclass(frozen=True)
class SubwindowFeatures:
    """Feature vector of one subwindow: seven features per diagram, in diagram order."""

    values: npt.NDArray[np.float64]

    def __len__(self) -> int:
        return len(self.values)


class FeatureSlot(BaseModel):
    """Description of one column of the subwindow feature vector."""

    index: int = Field(..., description="Position in the feature vector")
    source: str = Field(..., description="Diagram source: upper, lower or emb<m>")
    dim: int = Field(..., description="Homology dimension of the diagram")
    feature: str = Field(..., description="Feature name, e.g. 'w_inf'")
    name: str = Field(..., description="Column name, e.g. 'emb0.5_h1_w_inf'")


def subwindow_vector(
    diagrams: Sequence[PersistenceDiagram],
    expected: int = DIAGRAMS_PER_SUBWINDOW,
) -> SubwindowFeatures:
    """Concatenate the features of every diagram in order.

    Raises:
        WrongDiagramCount: If the number of diagrams differs from ``expected``
    """
    if len(diagrams) != expected:
        raise WrongDiagramCount(
            f"expected {expected} diagrams per subwindow, got {len(diagrams)}"
        )
    return SubwindowFeatures(
        np.concatenate([get_features(d).as_array() for d in diagrams])
    )


def feature_schema(schedule: DelaySchedule | None = None) -> list[FeatureSlot]:
    """Column layout of ``subwindow_vector`` for the given embedding schedule."""
    slots = []
    for source, dim in diagram_slots(schedule):
        for feature in FEATURE_NAMES:
            slots.append(
                FeatureSlot(
                    index=len(slots),
                    source=source,
                    dim=dim,
                    feature=feature,
                    name=f"{source}_h{dim}_{feature}",
                )
            )
    return slots
