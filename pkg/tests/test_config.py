"""Tests for configuration loading."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from tda_stress.config import (
    ENV_OUT_DIR,
    ENV_SEED,
    ENV_WORKERS,
    ExperimentConfig,
    load_config,
)
from tda_stress.errors import InvalidConfig


@pytest.fixture
def no_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    """Clear the config environment; returns a .env path that does not exist."""
    for name in (ENV_WORKERS, ENV_SEED, ENV_OUT_DIR):
        # setenv first so teardown also removes values a .env file loaded
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return tmp_path / "missing.env"


class TestLoadConfig:
    """Test load_config function."""

    def test_defaults(self, no_env: Path) -> None:
        config = load_config(env_file=no_env)
        assert config == ExperimentConfig()
        assert config.window.window_s == 60.0
        assert config.learn.classifier == "svc"
        assert config.synth.fs == Fraction(50)
        assert config.workers == 1

    def test_json_file(self, tmp_path: Path, no_env: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text(
            json.dumps(
                {
                    "learn": {"classifier": "lda", "cv_mode": "intra"},
                    "synth": {"signal": "ecg", "fs": "100"},
                    "seed": 9,
                }
            )
        )
        config = load_config(path, env_file=no_env)
        assert config.learn.classifier == "lda"
        assert config.learn.cv_mode == "intra"
        assert config.synth.fs == Fraction(100)
        assert config.seed == 9

    def test_toml_file(self, tmp_path: Path, no_env: Path) -> None:
        path = tmp_path / "config.toml"
        path.write_text(
            '[window]\nwindow_s = 30.0\n\n[ingest.target_fs]\nresp = "31/2"\n'
        )
        config = load_config(path, env_file=no_env)
        assert config.window.window_s == 30.0
        assert config.ingest.target_fs == {"resp": Fraction(31, 2)}

    def test_environment_overrides_file(
        self, tmp_path: Path, no_env: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"workers": 2, "seed": 1}))
        monkeypatch.setenv(ENV_WORKERS, "4")
        monkeypatch.setenv(ENV_OUT_DIR, str(tmp_path / "results"))

        config = load_config(path, env_file=no_env)
        assert config.workers == 4
        assert config.seed == 1
        assert config.out_dir == tmp_path / "results"

    def test_overrides_win(
        self, tmp_path: Path, no_env: Path, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv(ENV_SEED, "3")
        config = load_config(
            overrides={"seed": 5, "workers": None}, env_file=no_env
        )
        assert config.seed == 5
        assert config.workers == 1

    def test_env_file(self, tmp_path: Path, no_env: Path) -> None:
        env_file = tmp_path / ".env"
        env_file.write_text(f"{ENV_SEED}=21\n")
        assert load_config(env_file=env_file).seed == 21

    def test_invalid_fields_are_listed(self, tmp_path: Path, no_env: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text(
            json.dumps({"workers": 0, "learn": {"svc_c": -1.0, "classifier": "knn"}})
        )
        with pytest.raises(InvalidConfig) as exc_info:
            load_config(path, env_file=no_env)
        lines = str(exc_info.value).splitlines()
        assert any(line.startswith("workers:") for line in lines)
        assert any(line.startswith("learn.svc_c:") for line in lines)
        assert any(line.startswith("learn.classifier:") for line in lines)

    def test_embedding_must_fit_the_subwindow(
        self, tmp_path: Path, no_env: Path
    ) -> None:
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"window": {"window_s": 61.0, "subwindow_s": 1.0}}))
        with pytest.raises(
            InvalidConfig, match="embedding dimension 75 at 50 Hz exceeds the 1.0 s"
        ):
            load_config(path, env_file=no_env)

    def test_missing_file(self, tmp_path: Path, no_env: Path) -> None:
        with pytest.raises(InvalidConfig, match="not found"):
            load_config(tmp_path / "absent.toml", env_file=no_env)

    def test_malformed_file(self, tmp_path: Path, no_env: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text("{not json")
        with pytest.raises(InvalidConfig, match="config.json"):
            load_config(path, env_file=no_env)

    def test_top_level_must_be_object(self, tmp_path: Path, no_env: Path) -> None:
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(InvalidConfig, match="top level"):
            load_config(path, env_file=no_env)
