"""Storage manager for corpora, feature matrices and reports."""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ValidationError

from ..errors import CorpusFormatError, IoError
from ..learn.models import CvReport, WindowFeatureMatrix
from ..signal.models import SignalRecord
from ..signal.resample import average_channels
from .models import CorpusManifest, FeatureSchema, SubwindowSchema

logger = logging.getLogger(__name__)

MANIFEST_FILE = "manifest.json"
FEATURES_FILE = "features.csv"
FEATURES_SCHEMA_FILE = "features_schema.json"
SUBWINDOW_FILE = "subwindow_features.csv"
SUBWINDOW_SCHEMA_FILE = "subwindow_features.json"
REPORT_FILE = "report.json"
SUMMARY_FILE = "summary.txt"

CORPUS_COLUMNS = ("t_seconds", "value", "condition")
ROW_COLUMNS = ("subject", "condition", "window_start_s", "window_end_s")
SUBWINDOW_ROW_COLUMNS = ("subject", "condition", "sensor", "subwindow", "start_s")


class StorageManager:
    """Reads and writes pipeline artifacts under one directory."""

    def __init__(self, base_path: str | Path = "out"):
        """Initialize storage manager.

        Args:
            base_path: Directory holding the artifacts; created if missing
        """
        self.base_path = Path(base_path)
        try:
            self.base_path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise IoError(
                f"Cannot create output directory {self.base_path}: {e}"
            ) from e

    def _record_file(self, subject_id: str, sensor: str) -> Path:
        return self.base_path / f"{subject_id}_{sensor}.csv"

    # Corpus

    def save_corpus(
        self, records: list[SignalRecord], seed: int | None = None
    ) -> Path:
        """Write one CSV per (subject, sensor) plus ``manifest.json``.

        The conditions of a subject follow each other in the CSV and
        ``t_seconds`` runs on across them.

        Returns:
            Path to the manifest
        """
        subjects = list(dict.fromkeys(r.subject_id for r in records))
        sensors = list(dict.fromkeys(r.sensor for r in records))
        conditions = list(dict.fromkeys(r.condition for r in records))
        rates = {r.sensor: r.fs for r in records}
        fs: Fraction | dict[str, Fraction] = (
            next(iter(rates.values())) if len(set(rates.values())) == 1 else rates
        )

        for subject in subjects:
            for sensor in sensors:
                parts = [
                    r
                    for r in records
                    if r.subject_id == subject and r.sensor == sensor
                ]
                if parts:
                    path = self._record_file(subject, sensor)
                    self._write_csv(_records_frame(parts), path)

        manifest = CorpusManifest(
            fs=fs,
            subjects=subjects,
            sensors=sensors,
            conditions=conditions,
            seed=seed,
        )
        path = self.base_path / MANIFEST_FILE
        self._write_json(manifest, path)
        logger.info(
            "Saved corpus of %d records (%d subjects) to %s",
            len(records),
            len(subjects),
            self.base_path,
        )
        return path

    def load_manifest(self) -> CorpusManifest:
        path = self.base_path / MANIFEST_FILE
        data = self._read_json(path)
        try:
            return CorpusManifest.model_validate(data)
        except ValidationError as e:
            raise CorpusFormatError(f"{path}: invalid manifest: {e}") from None

    def load_corpus(
        self, sensors: list[str] | None = None
    ) -> tuple[CorpusManifest, list[SignalRecord]]:
        """Read every record of the corpus, in manifest order.

        Raises:
            CorpusFormatError: On missing columns, unknown conditions, sensors
                without a rate or non-finite values, naming the file and line
            IoError: If a file cannot be read
        """
        manifest = self.load_manifest()
        wanted = sensors or manifest.sensors
        unknown = sorted(set(wanted) - set(manifest.sensors))
        if unknown:
            raise CorpusFormatError(
                f"Sensors {unknown} are not in the corpus (has {manifest.sensors})"
            )
        for sensor in wanted:
            try:
                manifest.rate_for(sensor)
            except CorpusFormatError as e:
                path = self.base_path / MANIFEST_FILE
                raise CorpusFormatError(f"{path}: {e}") from e

        records = []
        for subject in manifest.subjects:
            for sensor in wanted:
                path = self._record_file(subject, sensor)
                records.extend(self._load_record_file(path, manifest, subject, sensor))
        return manifest, records

    def _load_record_file(
        self, path: Path, manifest: CorpusManifest, subject: str, sensor: str
    ) -> list[SignalRecord]:
        frame = self._read_csv(path, dtype={"condition": str})
        fixed = ("t_seconds", "condition")
        value_columns = [c for c in frame.columns if c not in fixed]
        missing = [c for c in fixed if c not in frame.columns]
        if missing or not value_columns:
            raise CorpusFormatError(
                f"{path}: expected columns {', '.join(CORPUS_COLUMNS)}, "
                f"got {', '.join(map(str, frame.columns))}"
            )

        numeric = frame[value_columns].apply(pd.to_numeric, errors="coerce")
        bad = ~np.isfinite(numeric.to_numpy(dtype=np.float64)).all(axis=1)
        if bad.any():
            # +2: one header line, 1-based lines
            line = int(np.flatnonzero(bad)[0]) + 2
            raise CorpusFormatError(f"{path}, line {line}: non-finite sample value")

        conditions = frame["condition"].astype(str)
        unknown = sorted(set(conditions) - set(manifest.conditions))
        if unknown:
            raise CorpusFormatError(
                f"{path}: conditions {unknown} are not listed in the manifest"
            )

        records = []
        for condition in manifest.conditions:
            rows = (conditions == condition).to_numpy()
            if not rows.any():
                continue
            channels = [numeric[c].to_numpy()[rows] for c in value_columns]
            samples = channels[0] if len(channels) == 1 else average_channels(channels)
            records.append(
                SignalRecord(
                    subject_id=subject,
                    condition=condition,
                    sensor=sensor,
                    fs=manifest.rate_for(sensor),
                    samples=samples,
                )
            )
        return records

    # Features

    def save_features(self, matrix: WindowFeatureMatrix, schema: FeatureSchema) -> Path:
        """Write ``features.csv`` and its ``features_schema.json`` sidecar."""
        frame = pd.DataFrame(matrix.values, columns=matrix.column_names)
        frame.insert(0, "subject", matrix.subjects)
        frame.insert(1, "condition", matrix.conditions)
        frame.insert(2, "window_start_s", matrix.window_times[:, 0])
        frame.insert(3, "window_end_s", matrix.window_times[:, 1])
        path = self.base_path / FEATURES_FILE
        self._write_csv(frame, path)
        self._write_json(schema, self.base_path / FEATURES_SCHEMA_FILE)
        logger.info(
            "Saved %d windows x %d features to %s",
            matrix.n_rows,
            len(matrix.columns),
            path,
        )
        return path

    def load_schema(self) -> FeatureSchema:
        path = self.base_path / FEATURES_SCHEMA_FILE
        try:
            return FeatureSchema.model_validate(self._read_json(path))
        except ValidationError as e:
            raise CorpusFormatError(f"{path}: invalid feature schema: {e}") from None

    def load_features(self) -> tuple[WindowFeatureMatrix, FeatureSchema]:
        """Read the feature matrix; labels are the conditions.

        Raises:
            CorpusFormatError: If the header disagrees with the schema or a
                value is not finite
        """
        schema = self.load_schema()
        path = self.base_path / FEATURES_FILE
        frame = self._read_csv(path, dtype={"subject": str, "condition": str})
        expected = [*ROW_COLUMNS, *(c.name for c in schema.columns)]
        if list(frame.columns) != expected:
            raise CorpusFormatError(
                f"{path}: header does not match {FEATURES_SCHEMA_FILE}"
            )
        values = frame[[c.name for c in schema.columns]].to_numpy(dtype=np.float64)
        matrix = WindowFeatureMatrix(
            values=values,
            columns=schema.columns,
            labels=frame["condition"].to_numpy(dtype=str),
            subjects=frame["subject"].to_numpy(dtype=str),
            window_times=frame[["window_start_s", "window_end_s"]].to_numpy(),
            conditions=frame["condition"].to_numpy(dtype=str),
        )
        try:
            matrix.validate()
        except CorpusFormatError as e:
            raise CorpusFormatError(f"{path}: {e}") from None
        return matrix, schema

    def save_subwindow_features(
        self, frame: pd.DataFrame, schema: SubwindowSchema
    ) -> Path:
        """Write the per-subwindow feature cache and its sidecar."""
        path = self.base_path / SUBWINDOW_FILE
        self._write_csv(frame, path)
        self._write_json(schema, self.base_path / SUBWINDOW_SCHEMA_FILE)
        return path

    def load_subwindow_features(self) -> tuple[pd.DataFrame, SubwindowSchema]:
        schema_path = self.base_path / SUBWINDOW_SCHEMA_FILE
        try:
            schema = SubwindowSchema.model_validate(self._read_json(schema_path))
        except ValidationError as e:
            raise CorpusFormatError(f"{schema_path}: invalid schema: {e}") from None
        path = self.base_path / SUBWINDOW_FILE
        frame = self._read_csv(
            path, dtype={"subject": str, "condition": str, "sensor": str}
        )
        expected = [*SUBWINDOW_ROW_COLUMNS, *(s.name for s in schema.slots)]
        if list(frame.columns) != expected:
            raise CorpusFormatError(
                f"{path}: header does not match {SUBWINDOW_SCHEMA_FILE}"
            )
        return frame, schema

    def has_subwindow_features(self) -> bool:
        return (self.base_path / SUBWINDOW_FILE).exists() and (
            self.base_path / SUBWINDOW_SCHEMA_FILE
        ).exists()

    # Reports

    def save_report(self, report: CvReport, name: str = REPORT_FILE) -> Path:
        path = self.base_path / name
        self._write_json(report, path)
        return path

    def load_report(self, name: str = REPORT_FILE) -> CvReport:
        path = self.base_path / name
        try:
            return CvReport.model_validate(self._read_json(path))
        except ValidationError as e:
            raise CorpusFormatError(f"{path}: invalid report: {e}") from None

    def save_text(self, text: str, name: str = SUMMARY_FILE) -> Path:
        path = self.base_path / name
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise IoError(f"Cannot write {path}: {e}") from None
        return path

    def save_table(self, frame: pd.DataFrame, name: str) -> Path:
        path = self.base_path / name
        self._write_csv(frame, path)
        return path

    def get_storage_stats(self) -> dict[str, Any]:
        """Summary of the artifacts present in the directory."""
        files = [f for f in self.base_path.iterdir() if f.is_file()]
        total_size = sum(f.stat().st_size for f in files)
        return {
            "files": sorted(f.name for f in files),
            "total_size_bytes": total_size,
            "total_size_mb": round(total_size / (1024 * 1024), 2),
            "storage_path": str(self.base_path.absolute()),
        }

    # Low-level I/O

    def _write_csv(self, frame: pd.DataFrame, path: Path) -> None:
        try:
            frame.to_csv(path, index=False, lineterminator="\n")
        except OSError as e:
            raise IoError(f"Cannot write {path}: {e}") from None

    def _read_csv(self, path: Path, **kwargs: Any) -> pd.DataFrame:
        if not path.exists():
            raise IoError(f"Missing file {path}")
        try:
            return pd.read_csv(path, float_precision="round_trip", **kwargs)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise CorpusFormatError(f"{path}: {e}") from None

    def _write_json(self, model: BaseModel, path: Path) -> None:
        try:
            with open(path, "w", encoding="utf-8") as f:
                json.dump(model.model_dump(mode="json"), f, indent=2)
                f.write("\n")
        except OSError as e:
            raise IoError(f"Cannot write {path}: {e}") from None

    def _read_json(self, path: Path) -> Any:
        if not path.exists():
            raise IoError(f"Missing file {path}")
        try:
            with open(path, encoding="utf-8") as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise CorpusFormatError(f"{path}: invalid JSON: {e}") from None
        except OSError as e:
            raise IoError(f"Cannot read {path}: {e}") from None


def _records_frame(records: list[SignalRecord]) -> pd.DataFrame:
    """Rows of consecutive records with a running time axis."""
    frames = []
    offset = Fraction(0)
    for record in records:
        n = len(record.samples)
        times = _times(n, record.fs, offset)
        frames.append(
            pd.DataFrame(
                {
                    "t_seconds": times,
                    "value": record.samples,
                    "condition": record.condition,
                }
            )
        )
        offset += Fraction(n) / record.fs
    return pd.concat(frames, ignore_index=True)


def _times(n: int, fs: Fraction, offset: Fraction) -> npt.NDArray[np.float64]:
    return float(offset) + np.arange(n, dtype=np.float64) / float(fs)

