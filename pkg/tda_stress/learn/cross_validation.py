"""Leave-one-subject-out and intra-subject cross-validation.

Every fold fits pruning, scaling and the classifier on its training rows
only; the test rows are transformed with the fitted parameters.
"""

import logging
from typing import Protocol

import numpy as np
import numpy.typing as npt
from sklearn.model_selection import LeaveOneGroupOut

from ..errors import ConditionTooShort, InvalidConfig, InvalidLabels, SingleSubject
from .lda import LinearDiscriminant
from .metrics import accuracy, confusion, macro_f1, sum_confusions
from .models import (
    ClassifierName,
    CvReport,
    FoldResult,
    LearnSettings,
    WindowFeatureMatrix,
)
from .preprocessing import prune_features, scale_features
from .svc import LinearSVC

logger = logging.getLogger(__name__)


class Classifier(Protocol):
    def fit(self, X: npt.ArrayLike, y: npt.ArrayLike) -> "Classifier": ...

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.generic]: ...


def make_classifier(
    name: ClassifierName, settings: LearnSettings | None = None, seed: int = 0
) -> Classifier:
    """Unfitted classifier configured from ``settings``."""
    settings = settings or LearnSettings()
    if name == "svc":
        return LinearSVC(
            C=settings.svc_c,
            tol=settings.svc_tol,
            max_epochs=settings.svc_max_epochs,
            random_state=seed,
        )
    if name == "lda":
        return LinearDiscriminant()
    raise InvalidConfig(f"Unknown classifier '{name}'. Valid classifiers: svc, lda")


def cross_validate_loso(
    matrix: WindowFeatureMatrix,
    classifier: ClassifierName = "svc",
    settings: LearnSettings | None = None,
    seed: int = 0,
) -> CvReport:
    """Hold out one subject per fold, in sorted subject order.

    Raises:
        SingleSubject: If the matrix has fewer than two subjects
        InvalidLabels: If the labels have fewer than two classes
    """
    settings = settings or LearnSettings()
    labels = _class_labels(matrix)
    subjects = np.unique(matrix.subjects)
    if len(subjects) < 2:
        raise SingleSubject(
            f"leave-one-subject-out needs at least 2 subjects, got {len(subjects)}"
        )

    folds: list[FoldResult] = []
    true_all: list[str] = []
    pred_all: list[str] = []
    splitter = LeaveOneGroupOut()
    for fold, (train_idx, test_idx) in enumerate(
        splitter.split(matrix.values, matrix.labels, groups=matrix.subjects)
    ):
        train = matrix.select_rows(train_idx)
        test = matrix.select_rows(test_idx)
        predicted, n_used = _fit_predict(train, test, classifier, settings, seed)
        subject = str(test.subjects[0])
        folds.append(
            _fold_result(
                fold, subject, None, train, test, predicted, n_used, labels
            )
        )
        true_all.extend(test.labels.tolist())
        pred_all.extend(predicted.tolist())
        logger.debug(
            "LOSO fold %d (%s): accuracy %.4f", fold, subject, folds[-1].accuracy
        )

    return CvReport(
        classifier=classifier,
        cv_mode="loso",
        task=settings.task,
        feature_subset=settings.feature_subset,
        folds=folds,
        mean_accuracy=float(np.mean([f.accuracy for f in folds])),
        macro_f1=macro_f1(true_all, pred_all, labels),
        confusion=sum_confusions([f.confusion for f in folds]),
    )


def split_at_midpoint(
    matrix: WindowFeatureMatrix,
) -> tuple[npt.NDArray[np.bool_], npt.NDArray[np.bool_]]:
    """Masks of the first-half and second-half windows of every
    (subject, condition) block.

    The midpoint of a block is halfway between its earliest window start and
    its latest window end. Windows spanning the midpoint belong to neither half.

    Raises:
        ConditionTooShort: If a block has no window on one side
    """
    first = np.zeros(matrix.n_rows, dtype=bool)
    second = np.zeros(matrix.n_rows, dtype=bool)
    starts, ends = matrix.window_times[:, 0], matrix.window_times[:, 1]
    for subject in dict.fromkeys(matrix.subjects.tolist()):
        for condition in dict.fromkeys(
            matrix.conditions[matrix.subjects == subject].tolist()
        ):
            block = (matrix.subjects == subject) & (matrix.conditions == condition)
            midpoint = (starts[block].min() + ends[block].max()) / 2
            block_first = block & (ends <= midpoint)
            block_second = block & (starts >= midpoint)
            if not block_first.any() or not block_second.any():
                raise ConditionTooShort(
                    f"subject '{subject}' condition '{condition}' has no window "
                    f"entirely on one side of its midpoint ({midpoint:g} s)"
                )
            first |= block_first
            second |= block_second
    return first, second


def cross_validate_intra(
    matrix: WindowFeatureMatrix,
    classifier: ClassifierName = "svc",
    settings: LearnSettings | None = None,
    seed: int = 0,
) -> CvReport:
    """Per subject, train on the first halves of its conditions and test on
    the second halves, then the reverse.

    Each direction is one fold. A subject's accuracy is the mean of its two
    folds; the reported mean is over subjects.

    Raises:
        ConditionTooShort: If a condition cannot be split
        InvalidLabels: If the labels have fewer than two classes
    """
    settings = settings or LearnSettings()
    labels = _class_labels(matrix)
    first, second = split_at_midpoint(matrix)
    dropped = int(matrix.n_rows - first.sum() - second.sum())
    if dropped:
        logger.info("Dropped %d windows straddling condition midpoints", dropped)

    folds: list[FoldResult] = []
    true_all: list[str] = []
    pred_all: list[str] = []
    for subject in dict.fromkeys(matrix.subjects.tolist()):
        own = matrix.subjects == subject
        halves = (
            ("first_to_second", own & first, own & second),
            ("second_to_first", own & second, own & first),
        )
        for direction, train_mask, test_mask in halves:
            train = matrix.select_rows(train_mask)
            test = matrix.select_rows(test_mask)
            predicted, n_used = _fit_predict(train, test, classifier, settings, seed)
            folds.append(
                _fold_result(
                    len(folds),
                    subject,
                    direction,
                    train,
                    test,
                    predicted,
                    n_used,
                    labels,
                )
            )
            true_all.extend(test.labels.tolist())
            pred_all.extend(predicted.tolist())

    report = CvReport(
        classifier=classifier,
        cv_mode="intra",
        task=settings.task,
        feature_subset=settings.feature_subset,
        folds=folds,
        mean_accuracy=0.0,
        macro_f1=macro_f1(true_all, pred_all, labels),
        confusion=sum_confusions([f.confusion for f in folds]),
        n_dropped_windows=dropped,
    )
    report.mean_accuracy = float(np.mean(list(report.subject_accuracies().values())))
    return report


def cross_validate(
    matrix: WindowFeatureMatrix,
    settings: LearnSettings | None = None,
    seed: int = 0,
) -> CvReport:
    """Run the cross-validation mode named in ``settings``."""
    settings = settings or LearnSettings()
    if settings.cv_mode == "intra":
        return cross_validate_intra(matrix, settings.classifier, settings, seed)
    return cross_validate_loso(matrix, settings.classifier, settings, seed)


def _fit_predict(
    train: WindowFeatureMatrix,
    test: WindowFeatureMatrix,
    classifier: ClassifierName,
    settings: LearnSettings,
    seed: int,
) -> tuple[npt.NDArray[np.str_], int]:
    mask = prune_features(train.values, settings.correlation_limit)
    train_x, test_x = scale_features(train.values[:, mask], test.values[:, mask])
    model = make_classifier(classifier, settings, seed).fit(train_x, train.labels)
    return np.asarray(model.predict(test_x), dtype=str), int(mask.sum())


def _fold_result(
    fold: int,
    subject: str,
    direction: str | None,
    train: WindowFeatureMatrix,
    test: WindowFeatureMatrix,
    predicted: npt.NDArray[np.str_],
    n_used: int,
    labels: list[str],
) -> FoldResult:
    return FoldResult(
        fold=fold,
        subject=subject,
        direction=direction,
        accuracy=accuracy(test.labels, predicted),
        n_train=train.n_rows,
        n_test=test.n_rows,
        n_features_used=n_used,
        confusion=confusion(test.labels, predicted, labels),
    )


def _class_labels(matrix: WindowFeatureMatrix) -> list[str]:
    labels: list[str] = np.unique(matrix.labels).tolist()
    if len(labels) < 2:
        raise InvalidLabels(
            f"classification needs at least two classes, found {labels}"
        )
    return labels
