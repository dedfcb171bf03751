"""Resampling, segmentation, delay embedding and rolling aggregation."""

from .models import DelaySchedule, SignalRecord, WindowSpec
from .resample import average_channels, resample
from .rolling import window_features
from .windows import delay_embedding, get_subwindows, subwindow_count

__all__ = [
    "DelaySchedule",
    "SignalRecord",
    "WindowSpec",
    "average_channels",
    "delay_embedding",
    "get_subwindows",
    "resample",
    "subwindow_count",
    "window_features",
]
