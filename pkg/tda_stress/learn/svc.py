"""Linear soft-margin SVM trained by dual coordinate descent."""

import logging
import warnings

import numpy as np
import numpy.typing as npt
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.preprocessing import LabelBinarizer

from ..errors import InvalidLabels, NotConverged

logger = logging.getLogger(__name__)


class LinearSVC(ClassifierMixin, BaseEstimator):  # type: ignore[misc]
    """Hinge-loss linear SVM, one-vs-rest for more than two classes.

    Each binary problem is solved in the dual with one coordinate update per
    sample and epoch, visiting samples in a seeded random order. The bias is
    learned as the weight of a constant feature. Training stops when the
    largest projected-gradient violation of an epoch is below ``tol`` or after
    ``max_epochs``; in the latter case ``converged`` is False and a
    ``NotConverged`` warning is emitted.
    """

    def __init__(
        self,
        C: float = 0.1,
        tol: float = 1e-4,
        max_epochs: int = 10_000,
        random_state: int = 0,
    ) -> None:
        self.C = C
        self.tol = tol
        self.max_epochs = max_epochs
        self.random_state = random_state

    def fit(self, X: npt.ArrayLike, y: npt.ArrayLike) -> "LinearSVC":
        values = _augment(X)
        self.label_binarizer_ = LabelBinarizer(neg_label=-1, pos_label=1)
        targets = self.label_binarizer_.fit_transform(np.asarray(y)).astype(np.float64)
        self.classes_ = self.label_binarizer_.classes_
        if len(self.classes_) < 2:
            raise InvalidLabels(
                f"SVC needs at least two classes, found {self.classes_.tolist()}"
            )

        n_vectors = targets.shape[1]
        weights = np.zeros((n_vectors, values.shape[1]), dtype=np.float64)
        self.dual_coef_ = np.zeros((n_vectors, values.shape[0]), dtype=np.float64)
        self.n_iter_ = np.zeros(n_vectors, dtype=int)
        self.converged = True
        for k in range(n_vectors):
            epochs, converged = self._dual_cd(
                values, targets[:, k], weights[k], self.dual_coef_[k]
            )
            self.n_iter_[k] = epochs
            self.converged = self.converged and converged

        self.coef_ = weights[:, :-1]
        self.intercept_ = weights[:, -1]
        if not self.converged:
            warnings.warn(
                f"dual coordinate descent did not reach tol={self.tol} "
                f"within {self.max_epochs} epochs",
                NotConverged,
                stacklevel=2,
            )
        return self

    def _dual_cd(
        self,
        values: npt.NDArray[np.float64],
        y: npt.NDArray[np.float64],
        w: npt.NDArray[np.float64],
        alpha: npt.NDArray[np.float64],
    ) -> tuple[int, bool]:
        rng = np.random.default_rng(self.random_state)
        sq_norms = np.einsum("ij,ij->i", values, values)
        n = values.shape[0]
        for epoch in range(1, self.max_epochs + 1):
            violation = 0.0
            for i in rng.permutation(n):
                g = y[i] * float(values[i] @ w) - 1.0
                if alpha[i] == 0.0:
                    pg = min(g, 0.0)
                elif alpha[i] == self.C:
                    pg = max(g, 0.0)
                else:
                    pg = g
                violation = max(violation, abs(pg))
                if pg == 0.0:
                    continue
                updated = min(max(alpha[i] - g / sq_norms[i], 0.0), self.C)
                w += (updated - alpha[i]) * y[i] * values[i]
                alpha[i] = updated
            if violation < self.tol:
                logger.debug("Dual CD converged after %d epochs", epoch)
                return epoch, True
        return self.max_epochs, False

    def decision_function(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Signed distances: shape (n,) for two classes, else (n, n_classes)."""
        values = np.asarray(X, dtype=np.float64)
        scores = values @ self.coef_.T + self.intercept_
        if scores.shape[1] == 1:
            binary: npt.NDArray[np.float64] = scores[:, 0]
            return binary
        return scores

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.generic]:
        """Binary: positive class where the decision value is > 0, otherwise the
        first class. One-vs-rest: argmax, ties to the lowest class index."""
        scores = self.decision_function(X)
        if scores.ndim == 1:
            index = (scores > 0).astype(int)
        else:
            index = np.argmax(scores, axis=1)
        predicted: npt.NDArray[np.generic] = self.classes_[index]
        return predicted

    def dual_objective(self, k: int = 0) -> float:
        """Dual objective ``0.5 * |w|^2 - sum(alpha)`` of binary problem ``k``."""
        w = np.append(self.coef_[k], self.intercept_[k])
        return float(0.5 * w @ w - self.dual_coef_[k].sum())


def train_svc(X: npt.ArrayLike, y: npt.ArrayLike, C: float = 0.1) -> LinearSVC:
    """Fit a ``LinearSVC`` with the default solver settings."""
    return LinearSVC(C=C).fit(X, y)


def predict_svc(model: LinearSVC, X: npt.ArrayLike) -> npt.NDArray[np.generic]:
    return model.predict(X)


def _augment(X: npt.ArrayLike) -> npt.NDArray[np.float64]:
    values = np.asarray(X, dtype=np.float64)
    return np.hstack([values, np.ones((values.shape[0], 1))])
