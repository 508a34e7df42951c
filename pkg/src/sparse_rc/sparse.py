"""Fixed-degree sparse matrices in compressed-row layout.

The reservoir weight matrices are sparse by construction: every row of the
recurrent matrix has exactly chi_r entries, every column of the input matrix
exactly chi_i. Storing them in CSR keeps the state update at O(nnz) instead
of O(N^2), which is the whole point of fixed-degree connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateSpectrumError, DimensionError

#: Radii at or below this are treated as numerically zero.
EPS_RADIUS = 1e-12


@dataclass
class SparseMatrix:
    """CSR matrix. Column indices are strictly increasing within each row."""

    rows: int
    cols: int
    row_ptr: np.ndarray
    col_idx: np.ndarray
    values: np.ndarray
    # filled lazily: (values, col_idx) reshaped to (rows, k) when every row
    # has the same number of entries, enabling a vectorized matvec
    _uniform: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.row_ptr = np.asarray(self.row_ptr, dtype=np.int64)
        self.col_idx = np.asarray(self.col_idx, dtype=np.int64)
        self.values = np.asarray(self.values, dtype=float)
        if self.row_ptr.shape != (self.rows + 1,):
            raise DimensionError("row_ptr must have length rows + 1")
        if self.row_ptr[0] != 0 or self.row_ptr[-1] != self.col_idx.size:
            raise DimensionError("row_ptr endpoints inconsistent with col_idx")
        if np.any(np.diff(self.row_ptr) < 0):
            raise DimensionError("row_ptr must be monotone")
        if self.col_idx.size != self.values.size:
            raise DimensionError("col_idx and values must have equal length")
        if self.col_idx.size and (self.col_idx.min() < 0 or self.col_idx.max() >= self.cols):
            raise DimensionError("column index out of range")
        degrees = np.diff(self.row_ptr)
        if self.rows and degrees.min() == degrees.max() and degrees[0] > 0:
            k = int(degrees[0])
            self._uniform = (
                self.values.reshape(self.rows, k),
                self.col_idx.reshape(self.rows, k),
            )

    @property
    def nnz(self) -> int:
        return int(self.values.size)

    @classmethod
    def from_rows(cls, rows: int, cols: int, row_entries) -> "SparseMatrix":
        """Build from a per-row list of (col_indices, values) pairs."""
        row_ptr = np.zeros(rows + 1, dtype=np.int64)
        cols_all, vals_all = [], []
        for i, (ci, vi) in enumerate(row_entries):
            ci = np.asarray(ci, dtype=np.int64)
            order = np.argsort(ci)
            cols_all.append(ci[order])
            vals_all.append(np.asarray(vi, dtype=float)[order])
            row_ptr[i + 1] = row_ptr[i] + ci.size
        col_idx = np.concatenate(cols_all) if cols_all else np.zeros(0, dtype=np.int64)
        values = np.concatenate(vals_all) if vals_all else np.zeros(0)
        return cls(rows, cols, row_ptr, col_idx, values)

    @classmethod
    def from_dense(cls, a: np.ndarray) -> "SparseMatrix":
        a = np.asarray(a, dtype=float)
        entries = [(np.nonzero(row)[0], row[np.nonzero(row)[0]]) for row in a]
        return cls.from_rows(a.shape[0], a.shape[1], entries)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols))
        for i in range(self.rows):
            lo, hi = self.row_ptr[i], self.row_ptr[i + 1]
            out[i, self.col_idx[lo:hi]] = self.values[lo:hi]
        return out

    def scaled(self, factor: float) -> "SparseMatrix":
        return SparseMatrix(self.rows, self.cols, self.row_ptr, self.col_idx,
                            self.values * factor)


def matvec(m: SparseMatrix, v: np.ndarray) -> np.ndarray:
    """Sparse matrix-vector product, O(nnz)."""
    v = np.asarray(v, dtype=float)
    if v.shape != (m.cols,):
        raise DimensionError(f"vector length {v.shape} incompatible with {m.rows}x{m.cols}")
    if m._uniform is not None:
        vals, cols = m._uniform
        return np.einsum("ij,ij->i", vals, v[cols])
    prods = m.values * v[m.col_idx]
    csum = np.concatenate(([0.0], np.cumsum(prods)))
    return csum[m.row_ptr[1:]] - csum[m.row_ptr[:-1]]


def spectral_radius(m: SparseMatrix) -> float:
    """Largest absolute eigenvalue of a square sparse matrix.

    Computed exactly from the dense eigenvalue spectrum; at reservoir scales
    (N of order 100) this is cheap, deterministic, and correct for complex
    dominant eigenvalue pairs, which random matrices frequently have.
    """
    if m.rows != m.cols:
        raise DimensionError(f"spectral radius needs a square matrix, got {m.rows}x{m.cols}")
    if m.nnz == 0:
        return 0.0
    return float(np.abs(np.linalg.eigvals(m.to_dense())).max())


def rescale_to_radius(m: SparseMatrix, target_rho: float) -> SparseMatrix:
    """Scale all values so the spectral radius hits ``target_rho``."""
    if target_rho <= 0:
        raise ValueError("target spectral radius must be > 0")
    rho = spectral_radius(m)
    if rho <= EPS_RADIUS:
        raise DegenerateSpectrumError(
            f"spectral radius {rho:.3e} is numerically zero; cannot rescale to {target_rho}"
        )
    return m.scaled(target_rho / rho)
