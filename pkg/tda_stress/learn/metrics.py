"""Accuracy, macro F1 and confusion matrices on string labels."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from sklearn.metrics import accuracy_score, confusion_matrix, f1_score

from .models import ConfusionMatrix


def confusion(
    y_true: npt.ArrayLike, y_pred: npt.ArrayLike, labels: Sequence[str]
) -> ConfusionMatrix:
    counts = confusion_matrix(y_true, y_pred, labels=list(labels))
    return ConfusionMatrix(labels=list(labels), counts=counts.astype(int).tolist())


def accuracy(y_true: npt.ArrayLike, y_pred: npt.ArrayLike) -> float:
    return float(accuracy_score(y_true, y_pred))


def macro_f1(
    y_true: npt.ArrayLike, y_pred: npt.ArrayLike, labels: Sequence[str]
) -> float:
    """Unweighted mean of per-class F1; a class never predicted scores 0."""
    return float(
        f1_score(y_true, y_pred, labels=list(labels), average="macro", zero_division=0)
    )


def sum_confusions(matrices: Sequence[ConfusionMatrix]) -> ConfusionMatrix:
    """Element-wise sum of matrices sharing one label order."""
    labels = matrices[0].labels
    total = np.zeros((len(labels), len(labels)), dtype=int)
    for matrix in matrices:
        if matrix.labels != labels:
            raise ValueError("confusion matrices have different label orders")
        total += np.asarray(matrix.counts, dtype=int)
    return ConfusionMatrix(labels=labels, counts=total.tolist())
