"""The fixed set of persistence diagrams computed for every subwindow."""

from fractions import Fraction

import numpy as np
import numpy.typing as npt

from ..signal.models import DelaySchedule
from ..signal.windows import delay_embedding
from .level_sets import level_set_persistence
from .models import DiagramKind, DiagramSource, PersistenceDiagram
from .rips import RipsBackend, rips_persistence


def get_diagrams(
    subwindow: npt.ArrayLike,
    fs: Fraction | int,
    schedule: DelaySchedule | None = None,
    backend: RipsBackend = "native",
) -> list[PersistenceDiagram]:
    """Diagrams of one subwindow in their fixed order.

    Upper level set, lower level set, then (H0, H1) of the Rips filtration of
    the delay embedding for every multiplier of the schedule. The default
    schedule gives 2 + 4 * 2 = 10 diagrams.

    Raises:
        DimensionTooLarge: If an embedding dimension exceeds the subwindow
    """
    schedule = schedule or DelaySchedule()
    series = np.asarray(subwindow, dtype=np.float64)
    rate = Fraction(fs)

    diagrams = [
        level_set_persistence(series, "upper"),
        level_set_persistence(series, "lower"),
    ]
    dimensions = schedule.dimensions(rate)
    for multiplier, dim in zip(schedule.multipliers, dimensions, strict=True):
        cloud = delay_embedding(series, dim, schedule.point_shift)
        source = DiagramSource(kind=DiagramKind.RIPS_EMBEDDING, multiplier=multiplier)
        diagrams.extend(rips_persistence(cloud, source=source, backend=backend))
    return diagrams


def diagram_slots(schedule: DelaySchedule | None = None) -> list[tuple[str, int]]:
    """(source label, homology dim) of each diagram ``get_diagrams`` returns."""
    schedule = schedule or DelaySchedule()
    slots = [("upper", 0), ("lower", 0)]
    for label in schedule.labels():
        slots.extend([(label, 0), (label, 1)])
    return slots
