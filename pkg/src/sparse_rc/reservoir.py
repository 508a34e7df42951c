"""Echo state network reservoir with fixed-degree sparse connectivity."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from . import rng
from .errors import DegenerateSpectrumError, DimensionError
from .sparse import EPS_RADIUS, SparseMatrix, matvec, spectral_radius

#: Degenerate recurrent draws (radius ~ 0) are redrawn at most this many times.
MAX_SPECTRUM_RETRIES = 5


class SparseReservoir(BaseEstimator, TransformerMixin):
    """Untrained recurrent layer with fixed in-degree recurrent connections
    and fixed out-degree input connections.

    The state h(t) evolves as ``h(t) = tanh(U x(t) + W h(t-1))`` from
    ``h(0) = 0``, with no bias term. Each reservoir unit receives exactly
    ``chi_r`` recurrent connections (rows of W), and each input unit feeds
    exactly ``chi_i`` reservoir units (columns of U). Weights are uniform in
    [-1, 1]; U is then scaled by ``input_scaling`` and W rescaled so its
    spectral radius equals ``spectral_radius``.

    Parameters
    ----------
    n_units : int
        Reservoir dimension N.
    n_inputs : int
        Input dimension M.
    chi_r : int
        Incoming recurrent connections per unit, 1 <= chi_r <= n_units.
    chi_i : int
        Outgoing connections per input unit, 1 <= chi_i <= n_units.
    spectral_radius : float
        Target largest absolute eigenvalue of W.
    input_scaling : float
        Multiplier applied to the uniform input weights.
    seed : int
        Master seed; construction is bit-reproducible given the seed.

    Attributes
    ----------
    input_weights_ : SparseMatrix, shape (n_units, n_inputs)
    recurrent_weights_ : SparseMatrix, shape (n_units, n_units)
    """

    def __init__(self, n_units=100, n_inputs=1, chi_r=10, chi_i=1,
                 spectral_radius=0.9, input_scaling=1.0, seed=0):
        self.n_units = n_units
        self.n_inputs = n_inputs
        self.chi_r = chi_r
        self.chi_i = chi_i
        self.spectral_radius = spectral_radius
        self.input_scaling = input_scaling
        self.seed = seed

    def _validate_params_(self):
        if self.n_units < 1 or self.n_inputs < 1:
            raise ValueError("n_units and n_inputs must be >= 1")
        if not 1 <= self.chi_r <= self.n_units:
            raise ValueError(f"chi_r must be in [1, {self.n_units}], got {self.chi_r}")
        if not 1 <= self.chi_i <= self.n_units:
            raise ValueError(f"chi_i must be in [1, {self.n_units}], got {self.chi_i}")
        if self.spectral_radius <= 0:
            raise ValueError("spectral_radius must be > 0")

    def fit(self, X=None, y=None):
        """Draw the input and recurrent weight matrices. X is ignored."""
        self._validate_params_()
        n, m = self.n_units, self.n_inputs

        u_stream = rng.derive_stream(self.seed, "input_weights")
        entries = [([], []) for _ in range(n)]
        for j in range(m):
            rows = rng.sample_without_replacement(u_stream, n, self.chi_i)
            vals = rng.uniform(u_stream, -1.0, 1.0, size=self.chi_i) * self.input_scaling
            for r, v in zip(rows, vals):
                entries[r][0].append(j)
                entries[r][1].append(v)
        self.input_weights_ = SparseMatrix.from_rows(n, m, entries)

        for attempt in range(MAX_SPECTRUM_RETRIES + 1):
            label = "recurrent_weights" if attempt == 0 else f"recurrent_weights/retry/{attempt}"
            w_stream = rng.derive_stream(self.seed, label)
            w_entries = []
            for _ in range(n):
                cols = rng.sample_without_replacement(w_stream, n, self.chi_r)
                vals = rng.uniform(w_stream, -1.0, 1.0, size=self.chi_r)
                w_entries.append((cols, vals))
            w = SparseMatrix.from_rows(n, n, w_entries)
            rho = spectral_radius(w)
            if rho > EPS_RADIUS:
                self.recurrent_weights_ = w.scaled(self.spectral_radius / rho)
                break
        else:
            raise DegenerateSpectrumError(
                f"recurrent matrix spectral radius stayed below {EPS_RADIUS} "
                f"after {MAX_SPECTRUM_RETRIES} redraws (N={n}, chi_r={self.chi_r})"
            )
        return self

    def transform(self, X):
        """Full state trajectory for an input series, shape (T, n_units)."""
        return self.run(X)

    def run(self, X, collect_from=0, initial_state=None):
        """Iterate the state update over ``X`` and collect states.

        Row ``t-1`` of ``X`` is the input x(t) for t = 1..T. The returned
        array holds h(t) for t = collect_from+1 .. T, so ``collect_from``
        drops an initial transient without storing it.
        """
        check_is_fitted(self, "recurrent_weights_")
        X = check_array(X, ensure_2d=True, dtype=float)
        t_len, m = X.shape
        if m != self.n_inputs:
            raise DimensionError(f"input has {m} columns, reservoir expects {self.n_inputs}")
        if not 0 <= collect_from < t_len:
            raise ValueError(f"collect_from must be in [0, {t_len}), got {collect_from}")

        if initial_state is None:
            h = np.zeros(self.n_units)
        else:
            h = np.asarray(initial_state, dtype=float)
            if h.shape != (self.n_units,):
                raise DimensionError("initial_state must have length n_units")

        w = self.recurrent_weights_
        # U x(t) for all t at once; U is tiny (N x M) so densifying is free
        drive = X @ self.input_weights_.to_dense().T
        out = np.empty((t_len - collect_from, self.n_units))
        for t in range(t_len):
            h = np.tanh(drive[t] + matvec(w, h))
            if t >= collect_from:
                out[t - collect_from] = h
        return out


def generate_input_series(length: int, lo: float, hi: float,
                          stream: np.random.Generator) -> np.ndarray:
    """iid uniform driving signal, shape (length, 1)."""
    if length < 1:
        raise ValueError("length must be >= 1")
    return rng.uniform(stream, lo, hi, size=(length, 1))
