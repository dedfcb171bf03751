"""Persistence diagrams of point clouds and level sets."""

from .distance import DistanceMatrix
from .level_sets import level_set_persistence
from .models import (
    DiagramKind,
    DiagramSource,
    PersistenceDiagram,
    PersistenceInterval,
)
from .rips import rips_persistence
from .subwindow import diagram_slots, get_diagrams

__all__ = [
    "DiagramKind",
    "DiagramSource",
    "DistanceMatrix",
    "PersistenceDiagram",
    "PersistenceInterval",
    "diagram_slots",
    "get_diagrams",
    "level_set_persistence",
    "rips_persistence",
]
