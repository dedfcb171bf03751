"""Configuration models for the synthetic corpus generator."""

from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from ..utils.rate_parser import format_rate, parse_rate_input

SignalKind = Literal["resp", "ecg"]


class SignalParams(BaseModel):
    """Parameters of one condition. RESP reads ``rpm``; ECG reads the HR pair."""

    rpm: float = Field(15.0, gt=0, description="Respirations per minute")
    hr_bpm: float = Field(70.0, gt=0, description="Mean heart rate in beats/min")
    hr_sd_bpm: float = Field(
        1.0, gt=0, description="Standard deviation of the per-beat heart rate"
    )


class SynthSpec(BaseModel):
    """A synthetic two-condition corpus: baseline then stress for every subject."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n_subjects: int = Field(20, ge=1, description="Number of subjects")
    duration_s: float = Field(120.0, gt=0, description="Seconds per condition")
    fs: Fraction = Field(Fraction(50), description="Sampling rate in Hz")
    signal: SignalKind = Field("resp", description="Signal to generate")
    baseline: SignalParams = Field(default_factory=SignalParams)
    stress: SignalParams = Field(
        default_factory=lambda: SignalParams(rpm=18.0, hr_bpm=73.0, hr_sd_bpm=1.0)
    )
    noise: float = Field(
        0.1, ge=0, description="Noise amplitude as a fraction of the signal peak"
    )
    seed: int = Field(0, description="Base seed; subject i uses seed + i")

    @field_validator("fs", mode="before")
    @classmethod
    def _parse_fs(cls, value: Any) -> Fraction:
        rate = parse_rate_input(value)
        if rate <= 0:
            raise ValueError("fs must be positive")
        return rate

    @field_serializer("fs")
    def _dump_fs(self, fs: Fraction) -> str:
        return format_rate(fs)

    def subject_ids(self) -> list[str]:
        return [f"S{i + 1:02d}" for i in range(self.n_subjects)]
