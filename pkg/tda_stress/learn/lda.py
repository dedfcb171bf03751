"""Linear discriminant analysis with a ridge-regularized pooled covariance."""

import numpy as np
import numpy.typing as npt
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from sklearn.base import BaseEstimator, ClassifierMixin

from ..errors import InvalidLabels, SingularCovariance

# Ridge strength relative to the mean variance of the pooled covariance
RIDGE_SCALE = 1e-6


class LinearDiscriminant(ClassifierMixin, BaseEstimator):  # type: ignore[misc]
    """Gaussian classifier with class means and one shared covariance.

    The pooled within-class covariance is the maximum-likelihood estimate
    (divided by the number of rows), regularized by ``lambda * I`` with
    ``lambda = ridge_scale * trace / p``. Priors are class frequencies.
    """

    def __init__(self, ridge_scale: float = RIDGE_SCALE) -> None:
        self.ridge_scale = ridge_scale

    def fit(self, X: npt.ArrayLike, y: npt.ArrayLike) -> "LinearDiscriminant":
        values = np.asarray(X, dtype=np.float64)
        labels = np.asarray(y)
        self.classes_, encoded = np.unique(labels, return_inverse=True)
        if len(self.classes_) < 2:
            raise InvalidLabels(
                f"LDA needs at least two classes, found {self.classes_.tolist()}"
            )

        n, p = values.shape
        means = np.vstack(
            [values[encoded == k].mean(axis=0) for k in range(len(self.classes_))]
        )
        centered = values - means[encoded]
        covariance = centered.T @ centered / n
        ridge = self.ridge_scale * np.trace(covariance) / p
        covariance[np.diag_indices(p)] += ridge
        try:
            factor = cho_factor(covariance)
        except LinAlgError as e:
            raise SingularCovariance(
                f"pooled covariance is singular (ridge {ridge:.3g}): {e}"
            ) from None

        # Score_k(x) = x . S^-1 mu_k - mu_k . S^-1 mu_k / 2 + log prior_k
        self.coef_ = cho_solve(factor, means.T).T
        priors = np.bincount(encoded) / n
        self.intercept_ = -0.5 * np.sum(self.coef_ * means, axis=1) + np.log(priors)
        self.means_ = means
        self.priors_ = priors
        self.covariance_ = covariance
        return self

    def decision_function(self, X: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Discriminant score of every class, shaped (n, n_classes)."""
        values = np.asarray(X, dtype=np.float64)
        scores: npt.NDArray[np.float64] = values @ self.coef_.T + self.intercept_
        return scores

    def predict(self, X: npt.ArrayLike) -> npt.NDArray[np.generic]:
        scores = self.decision_function(X)
        predicted: npt.NDArray[np.generic] = self.classes_[np.argmax(scores, axis=1)]
        return predicted


def train_lda(X: npt.ArrayLike, y: npt.ArrayLike) -> LinearDiscriminant:
    """Fit a ``LinearDiscriminant`` with the default ridge."""
    return LinearDiscriminant().fit(X, y)


def predict_lda(
    model: LinearDiscriminant, X: npt.ArrayLike
) -> npt.NDArray[np.generic]:
    return model.predict(X)
