"""Data models for feature matrices and cross-validation reports."""

from dataclasses import dataclass, field
from typing import Literal

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, Field

from ..errors import CorpusFormatError

Statistic = Literal["mean", "std"]
ClassifierName = Literal["svc", "lda"]
CvMode = Literal["loso", "intra"]
Task = Literal["binary", "multiclass"]


class FeatureColumn(BaseModel):
    """One column of a window feature matrix."""

    index: int = Field(..., description="Column position in the matrix")
    name: str = Field(..., description="e.g. 'resp__emb0.5_h1_w_inf_mean'")
    sensor: str = Field(..., description="Sensor the feature was computed on")
    source: str = Field(..., description="Diagram source: upper, lower or emb<m>")
    dim: int = Field(..., description="Homology dimension of the diagram")
    feature: str = Field(..., description="Diagram feature, e.g. 'entropy'")
    statistic: Statistic = Field(..., description="Rolling statistic over subwindows")


@dataclass
class WindowFeatureMatrix:
    """Per-window features with their labels, subjects and sample spans.

    Rows of a subject are contiguous. ``window_times`` holds the start and end
    of each window in seconds from the start of its condition record.
    """

    values: npt.NDArray[np.float64]
    columns: list[FeatureColumn]
    labels: npt.NDArray[np.str_]
    subjects: npt.NDArray[np.str_]
    window_times: npt.NDArray[np.float64]
    conditions: npt.NDArray[np.str_] = field(
        default_factory=lambda: np.array([], dtype=str)
    )

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)
        self.labels = np.asarray(self.labels, dtype=str)
        self.subjects = np.asarray(self.subjects, dtype=str)
        self.window_times = np.asarray(self.window_times, dtype=np.float64).reshape(
            -1, 2
        )
        if len(self.conditions) == 0:
            self.conditions = self.labels.copy()
        else:
            self.conditions = np.asarray(self.conditions, dtype=str)

    @property
    def n_rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def column_names(self) -> list[str]:
        return [c.name for c in self.columns]

    def validate(self) -> "WindowFeatureMatrix":
        """Check shapes, finiteness and subject contiguity.

        Raises:
            CorpusFormatError: Describing the first violation found
        """
        n = self.n_rows
        if self.values.ndim != 2:
            raise CorpusFormatError(
                f"feature values must be a matrix, got shape {self.values.shape}"
            )
        if self.values.shape[1] != len(self.columns):
            raise CorpusFormatError(
                f"{self.values.shape[1]} value columns but "
                f"{len(self.columns)} described columns"
            )
        for name, values in (
            ("labels", self.labels),
            ("subjects", self.subjects),
            ("window_times", self.window_times),
            ("conditions", self.conditions),
        ):
            if len(values) != n:
                raise CorpusFormatError(f"{len(values)} {name} for {n} rows")
        if not np.all(np.isfinite(self.values)):
            row = int(np.flatnonzero(~np.isfinite(self.values).all(axis=1))[0])
            raise CorpusFormatError(f"non-finite feature value in row {row}")

        seen: set[str] = set()
        previous = None
        for subject in self.subjects.tolist():
            if subject != previous:
                if subject in seen:
                    raise CorpusFormatError(
                        f"rows of subject '{subject}' are not contiguous"
                    )
                seen.add(subject)
                previous = subject
        return self

    def select_rows(self, mask: npt.NDArray[np.bool_]) -> "WindowFeatureMatrix":
        return WindowFeatureMatrix(
            values=self.values[mask],
            columns=self.columns,
            labels=self.labels[mask],
            subjects=self.subjects[mask],
            window_times=self.window_times[mask],
            conditions=self.conditions[mask],
        )

    def select_columns(self, indices: list[int]) -> "WindowFeatureMatrix":
        columns = [
            self.columns[i].model_copy(update={"index": k})
            for k, i in enumerate(indices)
        ]
        return WindowFeatureMatrix(
            values=self.values[:, indices],
            columns=columns,
            labels=self.labels,
            subjects=self.subjects,
            window_times=self.window_times,
            conditions=self.conditions,
        )

    def with_labels(self, labels: npt.ArrayLike) -> "WindowFeatureMatrix":
        return WindowFeatureMatrix(
            values=self.values,
            columns=self.columns,
            labels=np.asarray(labels, dtype=str),
            subjects=self.subjects,
            window_times=self.window_times,
            conditions=self.conditions,
        )


class ConfusionMatrix(BaseModel):
    """Class-by-class counts; rows are true labels, columns predictions."""

    labels: list[str] = Field(..., description="Class labels in row/column order")
    counts: list[list[int]] = Field(..., description="counts[true][predicted]")

    @property
    def total(self) -> int:
        return int(sum(sum(row) for row in self.counts))

    @property
    def accuracy(self) -> float:
        total = self.total
        if total == 0:
            return 0.0
        return sum(self.counts[k][k] for k in range(len(self.labels))) / total


class FoldResult(BaseModel):
    """Outcome of one train/test split."""

    fold: int = Field(..., description="Fold index, in evaluation order")
    subject: str = Field(..., description="Held-out (LOSO) or evaluated subject")
    direction: str | None = Field(
        None, description="Intra-subject split direction, e.g. 'first_to_second'"
    )
    accuracy: float = Field(..., description="Accuracy on the test windows")
    n_train: int = Field(..., description="Training windows")
    n_test: int = Field(..., description="Test windows")
    n_features_used: int = Field(..., description="Columns left after pruning")
    confusion: ConfusionMatrix


class CvReport(BaseModel):
    """Cross-validation result: per-fold accuracies and pooled metrics."""

    classifier: ClassifierName
    cv_mode: CvMode
    task: Task = "multiclass"
    feature_subset: str = "all"
    folds: list[FoldResult] = Field(default_factory=list)
    mean_accuracy: float = Field(..., description="Mean of per-fold accuracies")
    macro_f1: float = Field(..., description="Macro F1 over all test predictions")
    confusion: ConfusionMatrix = Field(..., description="Summed over folds")
    n_dropped_windows: int = Field(
        0, description="Windows straddling a condition midpoint (intra only)"
    )

    @property
    def fold_accuracies(self) -> list[float]:
        return [f.accuracy for f in self.folds]

    def subject_accuracies(self) -> dict[str, float]:
        """Mean accuracy per subject over that subject's folds."""
        grouped: dict[str, list[float]] = {}
        for fold in self.folds:
            grouped.setdefault(fold.subject, []).append(fold.accuracy)
        return {s: float(np.mean(a)) for s, a in grouped.items()}


class LearnSettings(BaseModel):
    """Classifier, cross-validation and preprocessing choices."""

    classifier: ClassifierName = Field("svc", description="svc or lda")
    cv_mode: CvMode = Field("loso", description="loso or intra")
    task: Task = Field("multiclass", description="binary or multiclass")
    stress_labels: list[str] = Field(
        default_factory=lambda: ["stress"],
        description="Conditions mapped to 'stress' by the binary task",
    )
    feature_subset: str = Field("all", description="Named feature subset")
    svc_c: float = Field(0.1, gt=0, description="SVM regularization parameter C")
    svc_tol: float = Field(1e-4, gt=0, description="Dual CD stopping tolerance")
    svc_max_epochs: int = Field(10_000, ge=1, description="Dual CD epoch limit")
    correlation_limit: float = Field(
        0.9, gt=0, le=1, description="Absolute correlation above which to prune"
    )
    sweep_windows: list[float] = Field(
        default_factory=lambda: [10.0, 20.0, 30.0, 60.0, 120.0],
        description="Window lengths (s) of the window-size sweep",
    )
    sweep_subwindows: list[float] = Field(
        default_factory=lambda: [4.0],
        description="Subwindow lengths (s) of the window-size sweep",
    )
