"""Data models for the on-disk corpus and feature sidecars."""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from ..diagrams.vector import FeatureSlot
from ..errors import CorpusFormatError
from ..learn.models import FeatureColumn
from ..signal.models import DelaySchedule, WindowSpec
from ..utils.rate_parser import format_rate, parse_rate_input


class CorpusManifest(BaseModel):
    """Contents of ``manifest.json`` in a corpus directory.

    ``fs`` is one rate for every sensor, or a map from sensor to rate.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    fs: Fraction | dict[str, Fraction] = Field(..., description="Sampling rate(s)")
    subjects: list[str] = Field(..., min_length=1, description="Subject ids")
    sensors: list[str] = Field(..., min_length=1, description="Sensor names")
    conditions: list[str] = Field(..., min_length=1, description="Condition order")
    seed: int | None = Field(None, description="Generator seed, if synthetic")

    @field_validator("fs", mode="before")
    @classmethod
    def _parse_fs(cls, value: Any) -> Fraction | dict[str, Fraction]:
        if isinstance(value, dict):
            return {str(k): parse_rate_input(v) for k, v in value.items()}
        return parse_rate_input(value)

    @field_serializer("fs")
    def _dump_fs(self, fs: Fraction | dict[str, Fraction]) -> str | dict[str, str]:
        if isinstance(fs, dict):
            return {k: format_rate(v) for k, v in fs.items()}
        return format_rate(fs)

    def rate_for(self, sensor: str) -> Fraction:
        """Sampling rate of ``sensor``.

        Raises:
            CorpusFormatError: If a per-sensor map does not list the sensor
        """
        if isinstance(self.fs, dict):
            if sensor not in self.fs:
                raise CorpusFormatError(f"fs lists no rate for sensor '{sensor}'")
            return self.fs[sensor]
        return self.fs


class FeatureSchema(BaseModel):
    """Sidecar describing every column of a window feature CSV."""

    columns: list[FeatureColumn] = Field(..., description="Feature columns in order")
    sensors: list[str] = Field(..., description="Sensors joined into each row")
    window: WindowSpec = Field(..., description="Window geometry of the rows")
    schedule: DelaySchedule = Field(..., description="Embedding schedule used")


class SubwindowSchema(BaseModel):
    """Sidecar of the per-subwindow feature cache."""

    slots: list[FeatureSlot] = Field(..., description="The 70 subwindow features")
    window: WindowSpec = Field(..., description="Subwindow length and shift used")
    schedule: DelaySchedule = Field(..., description="Embedding schedule used")
    fs: dict[str, str] = Field(
        default_factory=dict, description="Rate each sensor was processed at"
    )
