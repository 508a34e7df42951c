"""Representation-quality metrics: short-term memory capacity and effective
state dimension.

Memory capacity drives the reservoir with a scalar signal, trains one readout
unit per delay i to reconstruct x(t-i), and sums the squared correlations
between each reconstruction and its delayed target on held-out data.
Effective dimension is the participation ratio of the covariance eigenvalues
of the state trajectory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateTrajectoryError, DimensionError, ProtocolConfigError
from .linalg import DEFAULT_RCOND, covariance_eigenvalues
from .readout import LinearReadout

#: Variance products at or below this are treated as zero (no recallable signal).
EPS_VAR = 1e-30


@dataclass
class McResult:
    """Total memory capacity plus the per-delay squared correlations."""

    total: float
    per_delay: np.ndarray


@dataclass
class NeffResult:
    """Effective dimension and the covariance eigenvalues it came from."""

    value: float
    eigenvalues: np.ndarray


def squared_correlation(a, b) -> float:
    """cov^2(a, b) / (var(a) var(b)), with 0 for degenerate variance.

    Invariant under affine maps of either argument; always in [0, 1].
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise DimensionError("squared_correlation expects two equal-length 1-d series")
    if a.size < 2:
        raise DimensionError("need at least 2 samples")
    da = a - a.mean()
    db = b - b.mean()
    n = a.size
    cov = da @ db / n
    var_a = da @ da / n
    var_b = db @ db / n
    if var_a * var_b <= EPS_VAR:
        return 0.0
    # guard the Cauchy-Schwarz bound against roundoff overshoot
    return float(min(cov * cov / (var_a * var_b), 1.0))


def delayed_targets(x: np.ndarray, first_t: int, length: int, n_delays: int) -> np.ndarray:
    """Matrix whose column i-1 holds x(t - i) for t = first_t .. first_t+length-1.

    ``x`` is indexed so that x(t) lives at position t-1; callers must ensure
    first_t > n_delays so every delayed value is real data.
    """
    if first_t <= n_delays:
        raise ProtocolConfigError(
            f"first target time {first_t} must exceed n_delays={n_delays}")
    out = np.empty((length, n_delays))
    for i in range(1, n_delays + 1):
        start = first_t - i - 1
        out[:, i - 1] = x[start:start + length]
    return out


def memory_capacity_from_states(states: np.ndarray, x: np.ndarray, washout: int,
                                train_len: int, n_delays: int,
                                rcond: float = DEFAULT_RCOND) -> McResult:
    """Score a precomputed trajectory whose rows are h(t), t = washout+1 .. T."""
    x = np.asarray(x, dtype=float).ravel()
    t_total = x.size
    eval_len = t_total - washout - train_len
    if states.shape[0] != t_total - washout:
        raise ProtocolConfigError(
            f"trajectory has {states.shape[0]} rows, expected {t_total - washout}")

    train_targets = delayed_targets(x, washout + 1, train_len, n_delays)
    eval_targets = delayed_targets(x, washout + train_len + 1, eval_len, n_delays)
    readout = LinearReadout(rcond=rcond).fit(states[:train_len], train_targets)
    predicted = readout.predict(states[train_len:])

    per_delay = np.array([
        squared_correlation(eval_targets[:, i], predicted[:, i])
        for i in range(n_delays)
    ])
    return McResult(total=float(per_delay.sum()), per_delay=per_delay)


def memory_capacity(reservoir, inputs: np.ndarray, washout: int = 1000,
                    train_len: int = 4000, n_delays: int = 200,
                    rcond: float = DEFAULT_RCOND) -> McResult:
    """Short-term memory capacity of a fitted reservoir on a scalar signal.

    Trains the delay readouts on states at t in (washout, washout+train_len]
    and evaluates the squared correlations on the remaining tail.
    """
    inputs = np.asarray(inputs, dtype=float)
    t_total = inputs.shape[0]
    if washout < n_delays:
        raise ProtocolConfigError(
            f"washout ({washout}) must be >= n_delays ({n_delays}) so every "
            "delayed target indexes real data")
    if washout + train_len >= t_total:
        raise ProtocolConfigError(
            f"washout + train_len = {washout + train_len} leaves no evaluation "
            f"samples out of {t_total}")
    states = reservoir.run(inputs, collect_from=washout)
    return memory_capacity_from_states(states, inputs[:, 0], washout, train_len,
                                       n_delays, rcond=rcond)


def effective_dimension(states: np.ndarray) -> NeffResult:
    """Participation ratio of the trajectory's covariance eigenvalues."""
    lam = covariance_eigenvalues(states)
    total = lam.sum()
    if total <= EPS_VAR:
        raise DegenerateTrajectoryError(
            "state trajectory is constant; effective dimension is undefined")
    value = float(total * total / (lam @ lam))
    return NeffResult(value=value, eigenvalues=lam)
