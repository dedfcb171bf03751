"""Experiment configuration: file, environment and command-line layers.

Precedence, highest first: explicit CLI flags, ``TDA_STRESS_*`` environment
variables (a ``.env`` file is honoured), then the config file, then defaults.
"""

import json
import os
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

import toml
from dotenv import load_dotenv
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_serializer,
    field_validator,
    model_validator,
)

from .errors import InvalidConfig
from .learn.models import LearnSettings
from .signal.models import DelaySchedule, WindowSpec
from .synth.models import SynthSpec
from .utils.rate_parser import MAX_LCM_RATE, format_rate, parse_rate_input

ENV_WORKERS = "TDA_STRESS_WORKERS"
ENV_SEED = "TDA_STRESS_SEED"
ENV_OUT_DIR = "TDA_STRESS_OUT_DIR"


class HomologySettings(BaseModel):
    """Persistence computation options."""

    rips_backend: Literal["native", "ripser"] = Field(
        "native", description="Exact built-in reduction, or the ripser package"
    )


class IngestSettings(BaseModel):
    """Where to read an external corpus and how to resample it."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    corpus_dir: Path | None = Field(None, description="Corpus directory to ingest")
    target_fs: dict[str, Fraction] = Field(
        default_factory=dict,
        description="Rate each sensor is resampled to, e.g. {'resp': '100'}",
    )
    max_grid_rate: int = Field(
        MAX_LCM_RATE, gt=0, description="Largest interpolation grid in Hz"
    )

    @field_validator("target_fs", mode="before")
    @classmethod
    def _parse_rates(cls, value: Any) -> dict[str, Fraction]:
        return {str(k): parse_rate_input(v) for k, v in dict(value).items()}

    @field_serializer("target_fs")
    def _dump_rates(self, rates: dict[str, Fraction]) -> dict[str, str]:
        return {k: format_rate(v) for k, v in rates.items()}


class ExperimentConfig(BaseModel):
    """Everything one pipeline run needs."""

    window: WindowSpec = Field(default_factory=WindowSpec)
    schedule: DelaySchedule = Field(default_factory=DelaySchedule)
    homology: HomologySettings = Field(default_factory=HomologySettings)
    sensors: list[str] | None = Field(
        None, description="Sensors to use; all corpus sensors when omitted"
    )
    learn: LearnSettings = Field(default_factory=LearnSettings)
    synth: SynthSpec = Field(default_factory=SynthSpec)
    ingest: IngestSettings = Field(default_factory=IngestSettings)
    out_dir: Path = Field(Path("out"), description="Output directory")
    seed: int = Field(0, description="Seed for generation and the SVM solver")
    workers: int = Field(1, ge=1, description="Worker processes for extraction")

    @model_validator(mode="after")
    def _check_embedding(self) -> "ExperimentConfig":
        # Ingested corpora without a target rate are checked by the extractor
        for rate in {self.synth.fs, *self.ingest.target_fs.values()}:
            check_embedding(self.window, self.schedule, rate)
        return self


def check_embedding(
    window: WindowSpec, schedule: DelaySchedule, rate: Fraction
) -> None:
    """Check every embedding of the schedule fits in one subwindow at ``rate``.

    Raises:
        ValueError: Naming the first dimension that does not fit
    """
    subwindow = Fraction(repr(window.subwindow_s)) * rate
    for dim in schedule.dimensions(rate):
        if dim > subwindow:
            raise ValueError(
                f"embedding dimension {dim} at {format_rate(rate)} Hz "
                f"exceeds the {window.subwindow_s} s subwindow"
            )


def load_config(
    path: Path | None = None,
    overrides: dict[str, Any] | None = None,
    env_file: Path | None = None,
) -> ExperimentConfig:
    """Build the configuration from a JSON or TOML file, the environment and
    explicit overrides.

    Args:
        path: Config file (``.json`` or ``.toml``); defaults only when None
        overrides: Top-level fields set on the command line; None values are
            ignored
        env_file: ``.env`` file to load; the default search applies when None

    Raises:
        InvalidConfig: With one ``field: message`` line per failing field
    """
    data = _read_config_file(path) if path is not None else {}

    load_dotenv(dotenv_path=env_file)
    env_values = {
        "workers": os.getenv(ENV_WORKERS),
        "seed": os.getenv(ENV_SEED),
        "out_dir": os.getenv(ENV_OUT_DIR),
    }
    for layer in (env_values, overrides or {}):
        data.update({k: v for k, v in layer.items() if v is not None})

    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise InvalidConfig(format_validation_error(e)) from None


def format_validation_error(error: ValidationError) -> str:
    """One ``section.field: message`` line per failing field."""
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"]) or "config"
        lines.append(f"{location}: {item['msg']}")
    return "\n".join(lines)


def _read_config_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise InvalidConfig(f"Config file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
        if path.suffix.lower() == ".toml":
            data = toml.loads(text)
        else:
            data = json.loads(text)
    except (json.JSONDecodeError, toml.TomlDecodeError) as e:
        raise InvalidConfig(f"{path}: {e}") from None
    if not isinstance(data, dict):
        raise InvalidConfig(f"{path}: top level must be an object")
    return data
