"""Sparse echo state networks with fixed-degree connectivity, plus a benchmark
harness measuring short-term memory capacity and effective state dimension
over a (chi_r, chi_i) connectivity grid."""

from .experiment import (Protocol, RawRecord, SummaryCurves, SweepRecord, SweepSpec,
                         run_single, run_sweep, summarize)
from .metrics import (McResult, NeffResult, effective_dimension, memory_capacity,
                      squared_correlation)
from .readout import LinearReadout
from .reservoir import SparseReservoir, generate_input_series
from .sparse import SparseMatrix, matvec, rescale_to_radius, spectral_radius

__all__ = [
    "LinearReadout",
    "McResult",
    "NeffResult",
    "Protocol",
    "RawRecord",
    "SparseMatrix",
    "SparseReservoir",
    "SummaryCurves",
    "SweepRecord",
    "SweepSpec",
    "effective_dimension",
    "generate_input_series",
    "matvec",
    "memory_capacity",
    "rescale_to_radius",
    "run_single",
    "run_sweep",
    "spectral_radius",
    "squared_correlation",
    "summarize",
]

__version__ = "0.1.0"
