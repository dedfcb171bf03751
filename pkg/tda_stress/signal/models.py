"""Data models for univariate signals and their segmentation geometry."""

import math
from fractions import Fraction
from typing import Any

import numpy as np
import numpy.typing as npt
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from ..utils.rate_parser import format_rate, parse_rate_input


class SignalRecord(BaseModel):
    """A labeled univariate series for one (subject, condition, sensor) triple."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    subject_id: str = Field(..., description="Subject identifier (string)")
    condition: str = Field(
        ..., description="Condition label, e.g. 'baseline', 'stress', 'amusement'"
    )
    sensor: str = Field(..., description="Sensor/channel name, e.g. 'resp', 'ecg'")
    fs: Fraction = Field(..., description="Sampling frequency in Hz (exact rational)")
    samples: npt.NDArray[np.float64] = Field(
        ..., description="Ordered sample values, all finite"
    )

    @field_validator("fs", mode="before")
    @classmethod
    def _parse_fs(cls, value: Any) -> Fraction:
        return parse_rate_input(value)

    @field_validator("samples", mode="before")
    @classmethod
    def _check_samples(cls, value: Any) -> npt.NDArray[np.float64]:
        samples = np.array(value, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError(
                f"samples must be one-dimensional, got shape {samples.shape}"
            )
        if samples.size == 0:
            raise ValueError("samples must be nonempty")
        if not np.all(np.isfinite(samples)):
            bad = int(np.flatnonzero(~np.isfinite(samples))[0])
            raise ValueError(f"samples must be finite (first offending index {bad})")
        samples.setflags(write=False)
        return samples

    @field_serializer("fs")
    def _dump_fs(self, fs: Fraction) -> str:
        return format_rate(fs)

    @property
    def duration_s(self) -> float:
        """Duration covered by the samples, in seconds."""
        return float(len(self.samples) / self.fs)

    def with_samples(
        self, samples: npt.NDArray[np.float64], fs: Fraction
    ) -> "SignalRecord":
        """Copy of this record carrying new samples at a new rate."""
        return SignalRecord(
            subject_id=self.subject_id,
            condition=self.condition,
            sensor=self.sensor,
            fs=fs,
            samples=samples,
        )

    def __repr__(self) -> str:
        return (
            f"SignalRecord(subject_id={self.subject_id!r}, "
            f"condition={self.condition!r}, sensor={self.sensor!r}, "
            f"fs={format_rate(self.fs)}, n={len(self.samples)})"
        )


class WindowSpec(BaseModel):
    """Window and subwindow geometry, all values in seconds."""

    window_s: float = Field(60.0, gt=0, description="Window length in seconds")
    window_shift_s: float = Field(2.0, gt=0, description="Window shift in seconds")
    subwindow_s: float = Field(4.0, gt=0, description="Subwindow length in seconds")
    subwindow_shift_s: float = Field(
        2.0, gt=0, description="Subwindow shift in seconds"
    )

    @model_validator(mode="after")
    def _check_geometry(self) -> "WindowSpec":
        if self.subwindow_s > self.window_s:
            raise ValueError(
                f"subwindow_s ({self.subwindow_s}) must not exceed "
                f"window_s ({self.window_s})"
            )
        if self.window_shift_s != self.subwindow_shift_s:
            raise ValueError(
                "window_shift_s must equal subwindow_shift_s for rolling aggregation "
                f"(got {self.window_shift_s} and {self.subwindow_shift_s})"
            )
        steps = Fraction(repr(self.window_s - self.subwindow_s)) / Fraction(
            repr(self.subwindow_shift_s)
        )
        if steps.denominator != 1:
            raise ValueError(
                "window_s - subwindow_s must be a whole multiple of the shift "
                f"(got {self.window_s} - {self.subwindow_s} "
                f"over {self.subwindow_shift_s})"
            )
        return self

    @property
    def subwindows_per_window(self) -> int:
        """Number M of subwindows aggregated into one window."""
        steps = Fraction(repr(self.window_s - self.subwindow_s)) / Fraction(
            repr(self.subwindow_shift_s)
        )
        return int(steps) + 1

    def with_window(
        self, window_s: float, subwindow_s: float | None = None
    ) -> "WindowSpec":
        """Same shifts, different window (and optionally subwindow) length."""
        return WindowSpec(
            window_s=window_s,
            window_shift_s=self.window_shift_s,
            subwindow_s=self.subwindow_s if subwindow_s is None else subwindow_s,
            subwindow_shift_s=self.subwindow_shift_s,
        )


class DelaySchedule(BaseModel):
    """Embedding dimensions as multiples of the sampling rate."""

    multipliers: list[Fraction] = Field(
        default_factory=lambda: [Fraction(m, 2) for m in (1, 2, 3, 4)],
        description="Embedding dimension multipliers over fs, in output order",
    )
    point_shift: int = Field(
        1, ge=1, description="Stride between consecutive embedded points"
    )

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @field_validator("multipliers", mode="before")
    @classmethod
    def _parse_multipliers(cls, value: Any) -> list[Fraction]:
        parsed = [parse_rate_input(m) for m in value]
        if not parsed:
            raise ValueError("at least one multiplier is required")
        return parsed

    @field_serializer("multipliers")
    def _dump_multipliers(self, multipliers: list[Fraction]) -> list[str]:
        return [format_rate(m) for m in multipliers]

    def dimensions(self, fs: Fraction) -> list[int]:
        """Embedding dimension for every multiplier at rate ``fs``.

        Raises:
            ValueError: If a multiplier rounds to a dimension below 2
        """
        dims = []
        for multiplier in self.multipliers:
            dim = math.floor(multiplier * fs + Fraction(1, 2))
            if dim < 2:
                raise ValueError(
                    f"multiplier {format_rate(multiplier)} at {format_rate(fs)} Hz "
                    f"gives embedding dimension {dim}; at least 2 is required"
                )
            dims.append(dim)
        return dims

    def labels(self) -> list[str]:
        """Short labels used in feature names, e.g. ``emb0.5``."""
        return [f"emb{float(m):g}" for m in self.multipliers]
