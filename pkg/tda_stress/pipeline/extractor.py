"""Corpus to window-feature-matrix extraction.

resample -> subwindows -> diagrams -> 70-vector per subwindow -> rolling
mean/std per window -> join sensors of the same (subject, condition).
"""

import logging
import time
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np
import numpy.typing as npt
import pandas as pd
from joblib import Parallel, delayed

from ..config import ExperimentConfig, check_embedding
from ..diagrams.vector import FeatureSlot, feature_schema, subwindow_vector
from ..errors import CorpusFormatError, InvalidConfig
from ..homology.rips import RipsBackend
from ..homology.subwindow import get_diagrams
from ..learn.models import FeatureColumn, WindowFeatureMatrix
from ..signal.models import DelaySchedule, SignalRecord, WindowSpec
from ..signal.resample import resample
from ..signal.rolling import window_features
from ..signal.windows import get_subwindows
from ..storage.manager import StorageManager
from ..storage.models import FeatureSchema, SubwindowSchema
from ..utils.rate_parser import MAX_LCM_RATE, format_rate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecordFeatures:
    """Subwindow feature rows of one (subject, condition, sensor) record."""

    subject_id: str
    condition: str
    sensor: str
    fs: Fraction
    values: npt.NDArray[np.float64]


def prepare_records(
    records: Sequence[SignalRecord],
    target_fs: dict[str, Fraction] | None = None,
    max_grid_rate: int = MAX_LCM_RATE,
) -> list[SignalRecord]:
    """Resample every record whose sensor has a target rate."""
    targets = target_fs or {}
    return [
        resample(r, targets[r.sensor], max_grid_rate) if r.sensor in targets else r
        for r in records
    ]


def check_record_rates(
    records: Sequence[SignalRecord], config: ExperimentConfig
) -> None:
    """Check the embeddings fit one subwindow at the rate of every record.

    Raises:
        InvalidConfig: Naming the sensor and the dimension that does not fit
    """
    rates = {(r.sensor, r.fs) for r in records}
    for sensor, rate in sorted(rates):
        try:
            check_embedding(config.window, config.schedule, rate)
        except ValueError as e:
            raise InvalidConfig(f"sensor '{sensor}': {e}") from None


def _subwindow_row(
    subwindow: npt.NDArray[np.float64],
    fs: Fraction,
    schedule: DelaySchedule,
    backend: RipsBackend,
) -> npt.NDArray[np.float64]:
    diagrams = get_diagrams(subwindow, fs, schedule, backend)
    return subwindow_vector(diagrams, expected=2 + 2 * len(schedule.multipliers)).values


def extract_record(
    record: SignalRecord,
    window: WindowSpec,
    schedule: DelaySchedule,
    backend: RipsBackend = "native",
    workers: int = 1,
) -> RecordFeatures:
    """Feature vector of every subwindow of one record, in subwindow order."""
    subwindows = get_subwindows(
        record.samples, record.fs, window.subwindow_s, window.subwindow_shift_s
    )
    rows = Parallel(n_jobs=workers)(
        delayed(_subwindow_row)(np.array(sw), record.fs, schedule, backend)
        for sw in subwindows
    )
    return RecordFeatures(
        subject_id=record.subject_id,
        condition=record.condition,
        sensor=record.sensor,
        fs=record.fs,
        values=np.vstack(rows),
    )


def extract_subwindows(
    records: Sequence[SignalRecord],
    window: WindowSpec,
    schedule: DelaySchedule,
    backend: RipsBackend = "native",
    workers: int = 1,
) -> list[RecordFeatures]:
    """Subwindow features of all records, logging progress and timing."""
    started = time.perf_counter()
    results = []
    total_subwindows = 0
    for count, record in enumerate(records, start=1):
        record_started = time.perf_counter()
        features = extract_record(record, window, schedule, backend, workers)
        results.append(features)
        total_subwindows += len(features.values)
        logger.info(
            "[%d/%d] %s/%s/%s: %d subwindows in %.2f s",
            count,
            len(records),
            record.subject_id,
            record.condition,
            record.sensor,
            len(features.values),
            time.perf_counter() - record_started,
        )
    logger.info(
        "Extracted %d subwindows from %d records in %.2f s",
        total_subwindows,
        len(records),
        time.perf_counter() - started,
    )
    return results


def window_matrix(
    extracted: Sequence[RecordFeatures],
    window: WindowSpec,
    schedule: DelaySchedule,
) -> WindowFeatureMatrix:
    """Rolling mean and std of every window, sensors joined side by side.

    Rows follow the record order (subject, then condition). When sensors of
    one (subject, condition) yield different window counts, the extra
    windows of the longer ones are dropped.
    """
    per_window = window.subwindows_per_window
    slots = feature_schema(schedule)
    sensors = list(dict.fromkeys(r.sensor for r in extracted))
    blocks: dict[tuple[str, str], dict[str, RecordFeatures]] = {}
    for features in extracted:
        key = (features.subject_id, features.condition)
        blocks.setdefault(key, {})[features.sensor] = features

    values: list[npt.NDArray[np.float64]] = []
    times: list[npt.NDArray[np.float64]] = []
    subjects: list[str] = []
    conditions: list[str] = []
    for (subject, condition), by_sensor in blocks.items():
        missing = [s for s in sensors if s not in by_sensor]
        if missing:
            raise CorpusFormatError(
                f"subject '{subject}' condition '{condition}' lacks sensors {missing}"
            )
        stats = []
        for sensor in sensors:
            mu, sigma = window_features(by_sensor[sensor].values, per_window)
            stats.append((mu, sigma))
        n_windows = min(len(mu) for mu, _ in stats)
        if any(len(mu) != n_windows for mu, _ in stats):
            logger.warning(
                "%s/%s: sensors disagree on window count, keeping %d",
                subject,
                condition,
                n_windows,
            )
        values.append(
            np.hstack([np.hstack([mu[:n_windows], sd[:n_windows]]) for mu, sd in stats])
        )
        subjects.extend([subject] * n_windows)
        conditions.extend([condition] * n_windows)
        starts = np.arange(n_windows) * window.window_shift_s
        times.append(np.column_stack([starts, starts + window.window_s]))

    return WindowFeatureMatrix(
        values=np.vstack(values),
        columns=window_columns(sensors, slots),
        labels=np.array(conditions, dtype=str),
        subjects=np.array(subjects, dtype=str),
        window_times=np.vstack(times),
        conditions=np.array(conditions, dtype=str),
    )


def window_columns(
    sensors: Sequence[str], slots: Sequence[FeatureSlot]
) -> list[FeatureColumn]:
    """Column layout: per sensor, all means then all standard deviations."""
    columns: list[FeatureColumn] = []
    for sensor in sensors:
        for statistic in ("mean", "std"):
            for slot in slots:
                columns.append(
                    FeatureColumn(
                        index=len(columns),
                        name=f"{sensor}__{slot.name}_{statistic}",
                        sensor=sensor,
                        source=slot.source,
                        dim=slot.dim,
                        feature=slot.feature,
                        statistic=statistic,
                    )
                )
    return columns


def feature_schema_for(
    matrix: WindowFeatureMatrix, window: WindowSpec, schedule: DelaySchedule
) -> FeatureSchema:
    sensors = list(dict.fromkeys(c.sensor for c in matrix.columns))
    return FeatureSchema(
        columns=matrix.columns, sensors=sensors, window=window, schedule=schedule
    )


def subwindow_frame(
    extracted: Sequence[RecordFeatures],
    window: WindowSpec,
    schedule: DelaySchedule,
) -> tuple[pd.DataFrame, SubwindowSchema]:
    """Flatten subwindow features into the cache table and its sidecar."""
    slots = feature_schema(schedule)
    frames = []
    for features in extracted:
        n = len(features.values)
        frame = pd.DataFrame(features.values, columns=[s.name for s in slots])
        frame.insert(0, "subject", features.subject_id)
        frame.insert(1, "condition", features.condition)
        frame.insert(2, "sensor", features.sensor)
        frame.insert(3, "subwindow", np.arange(n))
        frame.insert(4, "start_s", np.arange(n) * window.subwindow_shift_s)
        frames.append(frame)
    schema = SubwindowSchema(
        slots=slots,
        window=window,
        schedule=schedule,
        fs={f.sensor: format_rate(f.fs) for f in extracted},
    )
    return pd.concat(frames, ignore_index=True), schema


def records_from_frame(
    frame: pd.DataFrame, schema: SubwindowSchema
) -> list[RecordFeatures]:
    """Inverse of ``subwindow_frame``, keeping the table's record order."""
    names = [s.name for s in schema.slots]
    keys = ["subject", "condition", "sensor"]
    extracted = []
    for (subject, condition, sensor), rows in frame.groupby(keys, sort=False):
        ordered = rows.sort_values("subwindow")
        extracted.append(
            RecordFeatures(
                subject_id=str(subject),
                condition=str(condition),
                sensor=str(sensor),
                fs=Fraction(schema.fs.get(str(sensor), "1")),
                values=ordered[names].to_numpy(dtype=np.float64),
            )
        )
    return extracted


def run_extraction(
    config: ExperimentConfig, corpus_dir: Path, storage: StorageManager
) -> tuple[WindowFeatureMatrix, list[RecordFeatures]]:
    """Read a corpus, extract its features and save them with their sidecars.

    Writes the window feature CSV and the subwindow feature cache into
    ``storage``.
    """
    _, records = StorageManager(corpus_dir).load_corpus(config.sensors)
    records = prepare_records(
        records, config.ingest.target_fs, config.ingest.max_grid_rate
    )
    check_record_rates(records, config)
    extracted = extract_subwindows(
        records,
        config.window,
        config.schedule,
        config.homology.rips_backend,
        config.workers,
    )
    frame, subwindow_schema = subwindow_frame(
        extracted, config.window, config.schedule
    )
    storage.save_subwindow_features(frame, subwindow_schema)

    matrix = window_matrix(extracted, config.window, config.schedule).validate()
    storage.save_features(
        matrix, feature_schema_for(matrix, config.window, config.schedule)
    )
    return matrix, extracted
