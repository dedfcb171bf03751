"""Tests for storage manager."""

import json
import tempfile
from collections.abc import Generator
from fractions import Fraction
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from tda_stress.errors import CorpusFormatError, IoError
from tda_stress.learn.cross_validation import cross_validate_loso
from tda_stress.signal.models import DelaySchedule, SignalRecord, WindowSpec
from tda_stress.storage.manager import (
    FEATURES_FILE,
    MANIFEST_FILE,
    StorageManager,
)
from tda_stress.storage.models import FeatureSchema
from tda_stress.synth.generators import generate_corpus
from tda_stress.synth.models import SynthSpec
from tests.conftest import make_matrix


class TestStorageManager:
    """Test StorageManager class."""

    @pytest.fixture
    def temp_storage(self) -> Generator[StorageManager]:
        """Create temporary storage directory."""
        with tempfile.TemporaryDirectory() as temp_dir:
            yield StorageManager(base_path=temp_dir)

    def test_init_creates_directory(self) -> None:
        """Test that initialization creates the storage directory."""
        with tempfile.TemporaryDirectory() as temp_dir:
            storage_path = Path(temp_dir) / "nested" / "out"
            StorageManager(base_path=storage_path)

            assert storage_path.is_dir()

    def test_corpus_round_trip(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        records = generate_corpus(tiny_spec)
        temp_storage.save_corpus(records, seed=tiny_spec.seed)

        manifest, loaded = temp_storage.load_corpus()
        assert manifest.fs == Fraction(10)
        assert manifest.subjects == ["S01", "S02", "S03"]
        assert manifest.conditions == ["baseline", "stress"]
        assert manifest.seed == 7
        assert len(loaded) == len(records)
        for original, read in zip(records, loaded, strict=True):
            assert (read.subject_id, read.condition) == (
                original.subject_id,
                original.condition,
            )
            np.testing.assert_array_equal(read.samples, original.samples)

    def test_corpus_time_axis_runs_on(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        temp_storage.save_corpus(generate_corpus(tiny_spec))
        frame = pd.read_csv(temp_storage.base_path / "S01_resp.csv")
        assert list(frame.columns) == ["t_seconds", "value", "condition"]
        assert len(frame) == 400
        assert frame["t_seconds"].iloc[200] == pytest.approx(20.0)
        assert frame["condition"].iloc[200] == "stress"

    def test_manifest_fraction_rate(self, temp_storage: StorageManager) -> None:
        spec = SynthSpec(n_subjects=2, duration_s=2.0, fs="31/2", seed=1)
        temp_storage.save_corpus(generate_corpus(spec))
        data = json.loads((temp_storage.base_path / MANIFEST_FILE).read_text())
        assert data["fs"] == "31/2"
        assert temp_storage.load_manifest().rate_for("resp") == Fraction(31, 2)

    def test_non_finite_sample_names_the_line(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        temp_storage.save_corpus(generate_corpus(tiny_spec))
        path = temp_storage.base_path / "S02_resp.csv"
        lines = path.read_text().splitlines()
        t, _, condition = lines[5].split(",")
        lines[5] = f"{t},nan,{condition}"
        path.write_text("\n".join(lines) + "\n")

        with pytest.raises(CorpusFormatError, match=r"S02_resp\.csv, line 6"):
            temp_storage.load_corpus()

    def test_unknown_condition(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        temp_storage.save_corpus(generate_corpus(tiny_spec))
        path = temp_storage.base_path / "S01_resp.csv"
        path.write_text(path.read_text().replace("stress", "panic"))
        with pytest.raises(CorpusFormatError, match="panic"):
            temp_storage.load_corpus()

    def test_missing_file(self, temp_storage: StorageManager) -> None:
        with pytest.raises(IoError, match="Missing file"):
            temp_storage.load_manifest()

    def test_multi_channel_values_are_averaged(
        self, temp_storage: StorageManager
    ) -> None:
        """Test accelerometer axes in extra columns are averaged per sample."""
        (temp_storage.base_path / MANIFEST_FILE).write_text(
            json.dumps(
                {
                    "fs": "4",
                    "subjects": ["S01"],
                    "sensors": ["acc"],
                    "conditions": ["baseline"],
                }
            )
        )
        frame = pd.DataFrame(
            {
                "t_seconds": [0.0, 0.25, 0.5],
                "x": [1.0, 2.0, 3.0],
                "y": [3.0, 4.0, 5.0],
                "z": [2.0, 0.0, 4.0],
                "condition": ["baseline"] * 3,
            }
        )
        frame.to_csv(temp_storage.base_path / "S01_acc.csv", index=False)

        _, records = temp_storage.load_corpus()
        assert len(records) == 1
        np.testing.assert_allclose(records[0].samples, [2.0, 2.0, 4.0])

    def test_unknown_sensor(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        temp_storage.save_corpus(generate_corpus(tiny_spec))
        with pytest.raises(CorpusFormatError, match="ecg"):
            temp_storage.load_corpus(["ecg"])

    def test_sensor_without_rate(
        self, temp_storage: StorageManager, tiny_spec: SynthSpec
    ) -> None:
        temp_storage.save_corpus(generate_corpus(tiny_spec))
        path = temp_storage.base_path / MANIFEST_FILE
        data = json.loads(path.read_text())
        data["fs"] = {"ecg": "10"}
        path.write_text(json.dumps(data))

        with pytest.raises(CorpusFormatError, match="no rate for sensor 'resp'"):
            temp_storage.load_corpus()
        with pytest.raises(CorpusFormatError):
            temp_storage.load_manifest().rate_for("resp")

    def test_features_round_trip(self, temp_storage: StorageManager) -> None:
        matrix = make_matrix(np.random.default_rng(0))
        schema = FeatureSchema(
            columns=matrix.columns,
            sensors=["resp"],
            window=WindowSpec(),
            schedule=DelaySchedule(),
        )
        temp_storage.save_features(matrix, schema)

        header = (temp_storage.base_path / FEATURES_FILE).read_text().splitlines()[0]
        assert header.startswith("subject,condition,window_start_s,window_end_s,")

        loaded, loaded_schema = temp_storage.load_features()
        np.testing.assert_array_equal(loaded.values, matrix.values)
        np.testing.assert_array_equal(loaded.subjects, matrix.subjects)
        np.testing.assert_array_equal(loaded.labels, matrix.labels)
        np.testing.assert_array_equal(loaded.window_times, matrix.window_times)
        assert loaded_schema.columns == matrix.columns

    def test_features_header_mismatch(self, temp_storage: StorageManager) -> None:
        matrix = make_matrix(np.random.default_rng(0))
        schema = FeatureSchema(
            columns=matrix.columns,
            sensors=["resp"],
            window=WindowSpec(),
            schedule=DelaySchedule(),
        )
        temp_storage.save_features(matrix, schema)
        path = temp_storage.base_path / FEATURES_FILE
        path.write_text(path.read_text().replace("resp__f0", "resp__renamed", 1))
        with pytest.raises(CorpusFormatError, match="header"):
            temp_storage.load_features()

    def test_report_round_trip(self, temp_storage: StorageManager) -> None:
        report = cross_validate_loso(make_matrix(np.random.default_rng(1)), "lda")
        temp_storage.save_report(report)
        assert temp_storage.load_report() == report

    def test_storage_stats(
        self, temp_storage: StorageManager, sine_record: SignalRecord
    ) -> None:
        temp_storage.save_corpus([sine_record])
        stats = temp_storage.get_storage_stats()
        assert stats["files"] == ["S01_resp.csv", MANIFEST_FILE]
        assert stats["total_size_bytes"] > 0
