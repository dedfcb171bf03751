"""Preprocessing, classifiers and cross-validation of window features."""

from .cross_validation import (
    cross_validate,
    cross_validate_intra,
    cross_validate_loso,
    make_classifier,
    split_at_midpoint,
)
from .lda import LinearDiscriminant, predict_lda, train_lda
from .metrics import accuracy, confusion, macro_f1, sum_confusions
from .models import (
    ConfusionMatrix,
    CvReport,
    FeatureColumn,
    FoldResult,
    LearnSettings,
    WindowFeatureMatrix,
)
from .preprocessing import apply_task, prune_features, scale_features, select_features
from .svc import LinearSVC, predict_svc, train_svc

__all__ = [
    "ConfusionMatrix",
    "CvReport",
    "FeatureColumn",
    "FoldResult",
    "LearnSettings",
    "LinearDiscriminant",
    "LinearSVC",
    "WindowFeatureMatrix",
    "accuracy",
    "apply_task",
    "confusion",
    "cross_validate",
    "cross_validate_intra",
    "cross_validate_loso",
    "macro_f1",
    "make_classifier",
    "predict_lda",
    "predict_svc",
    "prune_features",
    "scale_features",
    "select_features",
    "split_at_midpoint",
    "sum_confusions",
    "train_lda",
    "train_svc",
]
