"""Tests for leave-one-subject-out and intra-subject cross-validation."""

import numpy as np
import pytest
from pytest_mock import MockerFixture
from sklearn.preprocessing import MinMaxScaler

from tda_stress.errors import ConditionTooShort, InvalidConfig, SingleSubject
from tda_stress.learn import cross_validation as cv_module
from tda_stress.learn.cross_validation import (
    cross_validate,
    cross_validate_intra,
    cross_validate_loso,
    make_classifier,
    split_at_midpoint,
)
from tda_stress.learn.lda import LinearDiscriminant
from tda_stress.learn.models import LearnSettings, WindowFeatureMatrix
from tda_stress.learn.svc import LinearSVC
from tests.conftest import make_matrix


class TestMakeClassifier:
    """Test make_classifier function."""

    def test_svc_settings(self) -> None:
        model = make_classifier("svc", LearnSettings(svc_c=2.0), seed=5)
        assert isinstance(model, LinearSVC)
        assert model.C == 2.0
        assert model.random_state == 5

    def test_lda(self) -> None:
        assert isinstance(make_classifier("lda"), LinearDiscriminant)

    def test_unknown(self) -> None:
        with pytest.raises(InvalidConfig):
            make_classifier("knn")  # type: ignore[arg-type]


class TestLoso:
    """Test cross_validate_loso function."""

    @pytest.mark.parametrize("classifier", ["svc", "lda"])
    def test_separable_classes(
        self, rng: np.random.Generator, classifier: str
    ) -> None:
        matrix = make_matrix(rng, separation=6.0)
        report = cross_validate_loso(matrix, classifier)  # type: ignore[arg-type]
        assert [f.subject for f in report.folds] == ["S01", "S02", "S03", "S04"]
        assert all(f.n_test == 24 and f.n_train == 72 for f in report.folds)
        assert report.mean_accuracy >= 0.95
        assert report.cv_mode == "loso"
        assert report.confusion.total == 96

    def test_folds_follow_sorted_subjects(self, rng: np.random.Generator) -> None:
        matrix = make_matrix(rng, n_subjects=3)
        order = np.argsort(matrix.subjects, kind="stable")[::-1]
        shuffled = matrix.select_rows(order)
        report = cross_validate_loso(shuffled, "lda")
        assert [f.subject for f in report.folds] == ["S01", "S02", "S03"]

    def test_confusion_is_sum_of_folds(
        self, separable_matrix: WindowFeatureMatrix
    ) -> None:
        report = cross_validate_loso(separable_matrix, "lda")
        summed = np.sum([f.confusion.counts for f in report.folds], axis=0)
        assert report.confusion.counts == summed.tolist()
        assert report.mean_accuracy == pytest.approx(
            np.mean(report.fold_accuracies())
        )

    def test_three_classes(self, rng: np.random.Generator) -> None:
        matrix = make_matrix(
            rng, separation=6.0, conditions=("baseline", "stress", "amusement")
        )
        report = cross_validate_loso(matrix, "svc")
        assert report.confusion.labels == ["amusement", "baseline", "stress"]
        assert report.mean_accuracy >= 0.9

    def test_single_subject(self, rng: np.random.Generator) -> None:
        with pytest.raises(SingleSubject):
            cross_validate_loso(make_matrix(rng, n_subjects=1))


class TestIntra:
    """Test split_at_midpoint and cross_validate_intra functions."""

    def test_midpoint_split(self, separable_matrix: WindowFeatureMatrix) -> None:
        """Test windows 0..22 s long 10 s split at 16 s into four and four."""
        first, second = split_at_midpoint(separable_matrix)
        assert first.sum() == second.sum() == 32
        assert not np.any(first & second)
        starts = separable_matrix.window_times[:, 0]
        assert set(starts[first].tolist()) == {0.0, 2.0, 4.0, 6.0}
        assert set(starts[second].tolist()) == {16.0, 18.0, 20.0, 22.0}

    def test_folds(self, separable_matrix: WindowFeatureMatrix) -> None:
        report = cross_validate_intra(separable_matrix, "lda")
        assert len(report.folds) == 8
        assert report.n_dropped_windows == 32
        assert all(f.n_test == 8 and f.n_train == 8 for f in report.folds)
        assert [f.direction for f in report.folds[:2]] == [
            "first_to_second",
            "second_to_first",
        ]
        subject_means = report.subject_accuracies()
        assert list(subject_means) == ["S01", "S02", "S03", "S04"]
        assert report.mean_accuracy == pytest.approx(
            np.mean(list(subject_means.values()))
        )

    def test_condition_too_short(self, rng: np.random.Generator) -> None:
        with pytest.raises(ConditionTooShort):
            cross_validate_intra(make_matrix(rng, n_windows=1))

    def test_dispatch(self, separable_matrix: WindowFeatureMatrix) -> None:
        settings = LearnSettings(cv_mode="intra", classifier="lda")
        assert cross_validate(separable_matrix, settings).cv_mode == "intra"


class TestNoLeakage:
    """Fitting in every fold must only see that fold's training rows."""

    @pytest.mark.parametrize("cv_mode", ["loso", "intra"])
    @pytest.mark.parametrize("classifier", ["svc", "lda"])
    def test_fits_never_see_test_rows(
        self,
        mocker: MockerFixture,
        separable_matrix: WindowFeatureMatrix,
        cv_mode: str,
        classifier: str,
    ) -> None:
        original = cv_module._fit_predict

        def poisoned(
            train: WindowFeatureMatrix, test: WindowFeatureMatrix, *args: object
        ) -> object:
            hidden = WindowFeatureMatrix(
                values=np.full_like(test.values, np.nan),
                columns=test.columns,
                labels=test.labels,
                subjects=test.subjects,
                window_times=test.window_times,
                conditions=test.conditions,
            )
            return original(train, hidden, *args)

        mocker.patch.object(cv_module, "_fit_predict", side_effect=poisoned)
        prune_spy = mocker.spy(cv_module, "prune_features")
        scaler_spy = mocker.spy(MinMaxScaler, "fit")
        model_spy = mocker.spy(
            LinearSVC if classifier == "svc" else LinearDiscriminant, "fit"
        )

        settings = LearnSettings.model_validate(
            {"cv_mode": cv_mode, "classifier": classifier}
        )
        report = cross_validate(separable_matrix, settings)

        n_folds = len(report.folds)
        assert prune_spy.call_count == n_folds
        assert scaler_spy.call_count == n_folds
        assert model_spy.call_count == n_folds
        for call in prune_spy.call_args_list:
            assert np.all(np.isfinite(call.args[0]))
        for call in scaler_spy.call_args_list:
            assert np.all(np.isfinite(call.args[1]))
        for call in model_spy.call_args_list:
            assert np.all(np.isfinite(call.args[1]))
