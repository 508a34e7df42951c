"""Linear readout trained in closed form by pseudo-inversion."""

from __future__ import annotations

import warnings

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .linalg import DEFAULT_RCOND, lstsq_min_norm


class LinearReadout(BaseEstimator, RegressorMixin):
    """Affine map ``y(t) = V h(t) + b`` fit by minimum-norm least squares.

    The bias is realized as a constant unit column appended to the design
    matrix, and all output targets are solved jointly in a single SVD-based
    solve (identical to solving each target separately, since the design
    matrix is shared).

    Attributes
    ----------
    coef_ : ndarray, shape (n_targets, n_features)
    intercept_ : ndarray, shape (n_targets,)
    """

    def __init__(self, rcond=DEFAULT_RCOND):
        self.rcond = rcond

    def fit(self, X, y):
        X = check_array(X, dtype=float)
        y = np.asarray(y, dtype=float)
        self._y_1d_ = y.ndim == 1
        if self._y_1d_:
            y = y[:, None]
        if X.shape[0] < X.shape[1] + 1:
            warnings.warn(
                f"readout trained on {X.shape[0]} samples for {X.shape[1]} features; "
                "solution is under-determined", stacklevel=2)
        aug = np.hstack([X, np.ones((X.shape[0], 1))])
        sol = lstsq_min_norm(aug, y, rcond=self.rcond)
        self.coef_ = sol[:-1].T
        self.intercept_ = sol[-1]
        return self

    def predict(self, X):
        check_is_fitted(self, "coef_")
        X = check_array(X, dtype=float)
        y = X @ self.coef_.T + self.intercept_
        return y[:, 0] if self._y_1d_ else y
