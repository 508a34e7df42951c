"""Dense numeric kernels: SVD, minimum-norm least squares, covariance spectra.

Thin wrappers over numpy's LAPACK-backed routines, with the error handling and
conventions the rest of the package relies on (descending eigenvalues, rcond
relative to the largest singular value, explicit shape checks).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NumericError

DEFAULT_RCOND = 1e-10


@dataclass
class SvdResult:
    """Thin SVD: ``a = u @ diag(s) @ vt`` with ``s`` non-increasing."""

    u: np.ndarray
    s: np.ndarray
    vt: np.ndarray


def svd(a: np.ndarray) -> SvdResult:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"svd expects a 2-d matrix, got shape {a.shape}")
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"SVD did not converge on a {a.shape[0]}x{a.shape[1]} matrix") from exc
    return SvdResult(u=u, s=s, vt=vt)


def lstsq_min_norm(a: np.ndarray, b: np.ndarray, rcond: float = DEFAULT_RCOND) -> np.ndarray:
    """Minimum-Frobenius-norm X minimizing ||A X - B||_F.

    Solved through the SVD pseudo-inverse; singular values below
    ``rcond * s_max`` are treated as zero.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError("lstsq_min_norm expects 2-d operands")
    if a.shape[0] != b.shape[0]:
        raise DimensionError(
            f"row mismatch: a has {a.shape[0]} rows, b has {b.shape[0]}"
        )
    if rcond < 0:
        raise ValueError("rcond must be >= 0")
    try:
        x, _, _, _ = np.linalg.lstsq(a, b, rcond=rcond)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"least-squares solve failed on {a.shape} design matrix") from exc
    return x


def covariance_eigenvalues(states: np.ndarray) -> np.ndarray:
    """Eigenvalues (descending, length N) of the empirical covariance of rows.

    Computed as squared singular values of the column-centered state matrix
    divided by T-1, which is numerically safer than forming the covariance
    matrix explicitly.
    """
    states = np.asarray(states, dtype=float)
    if states.ndim != 2:
        raise DimensionError("covariance_eigenvalues expects a T x N matrix")
    t, n = states.shape
    if t < 2:
        raise NumericError(f"need at least 2 samples for a covariance, got {t}")
    centered = states - states.mean(axis=0)
    s = np.linalg.svd(centered, compute_uv=False)
    lam = s * s / (t - 1)
    if lam.size < n:
        lam = np.concatenate([lam, np.zeros(n - lam.size)])
    return lam
