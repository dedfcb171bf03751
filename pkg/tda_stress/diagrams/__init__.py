"""Feature engineering on persistence diagrams."""

from .features import (
    FEATURE_NAMES,
    DiagramFeatures,
    betti_curve,
    get_features,
    landscape,
)
from .vector import (
    DIAGRAMS_PER_SUBWINDOW,
    FeatureSlot,
    SubwindowFeatures,
    feature_schema,
    subwindow_vector,
)

__all__ = [
    "DIAGRAMS_PER_SUBWINDOW",
    "FEATURE_NAMES",
    "DiagramFeatures",
    "FeatureSlot",
    "SubwindowFeatures",
    "betti_curve",
    "feature_schema",
    "get_features",
    "landscape",
    "subwindow_vector",
]
