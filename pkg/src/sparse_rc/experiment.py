"""Connectivity sweep harness.

Runs the benchmark protocol over a (chi_r, chi_i) grid: for each cell, draw
``realizations`` independent reservoirs and input series, measure memory
capacity and effective dimension, and aggregate mean/std per cell. Randomness
is derived from labeled streams keyed by cell and realization, so results are
independent of worker count and of which other cells are in the grid.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from joblib import Parallel, delayed

from . import rng
from .errors import EmptySummaryError, NumericError, ProtocolConfigError
from .linalg import DEFAULT_RCOND
from .metrics import McResult, NeffResult, effective_dimension, memory_capacity_from_states
from .reservoir import SparseReservoir, generate_input_series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Protocol:
    """Lengths and input range of one benchmark run."""

    series_len: int = 6000
    washout: int = 1000
    train_len: int = 4000
    n_delays: int = 200
    input_lo: float = -0.8
    input_hi: float = 0.8

    def validate(self):
        if self.washout < self.n_delays:
            raise ProtocolConfigError(
                f"washout ({self.washout}) must cover n_delays ({self.n_delays})")
        if self.washout + self.train_len >= self.series_len:
            raise ProtocolConfigError(
                "washout + train_len must leave evaluation samples "
                f"({self.washout}+{self.train_len} >= {self.series_len})")
        if not self.input_lo < self.input_hi:
            raise ProtocolConfigError("input_lo must be < input_hi")

    @property
    def eval_len(self) -> int:
        return self.series_len - self.washout - self.train_len


@dataclass(frozen=True)
class SweepSpec:
    """Everything needed to reproduce a sweep from its master seed."""

    chi_r_values: tuple
    chi_i_values: tuple
    master_seed: int = 42
    n_units: int = 100
    n_inputs: int = 1
    spectral_radius: float = 0.9
    input_scaling: float = 1.0
    realizations: int = 50
    protocol: Protocol = field(default_factory=Protocol)

    def validate(self):
        self.protocol.validate()
        if self.realizations < 1:
            raise ValueError("realizations must be >= 1")
        for name, values in (("chi_r", self.chi_r_values), ("chi_i", self.chi_i_values)):
            if not values:
                raise ValueError(f"{name}_values must be non-empty")
            for v in values:
                if not 1 <= v <= self.n_units:
                    raise ValueError(f"{name}={v} outside [1, {self.n_units}]")


@dataclass
class SweepRecord:
    """Aggregated statistics for one (chi_r, chi_i) cell."""

    chi_r: int
    chi_i: int
    n_ok: int
    mc_mean: float
    mc_std: float
    neff_mean: float
    neff_std: float


@dataclass
class RawRecord:
    """Per-realization result, kept for the optional raw dump and audits."""

    chi_r: int
    chi_i: int
    realization: int
    mc_total: float
    neff: float
    per_delay_min: float
    per_delay_max: float


def run_single(spec: SweepSpec, chi_r: int, chi_i: int,
               realization_idx: int) -> tuple[McResult, NeffResult]:
    """One realization of one cell: fresh input series, fresh reservoir.

    Deterministic given (master seed, cell, realization index). The effective
    dimension is computed on the same final evaluation window used to score
    memory capacity.
    """
    proto = spec.protocol
    label = f"cell/{chi_r}/{chi_i}/real/{realization_idx}"
    input_stream = rng.derive_stream(spec.master_seed, label + "/input")
    inputs = generate_input_series(proto.series_len, proto.input_lo, proto.input_hi,
                                   input_stream)
    reservoir = SparseReservoir(
        n_units=spec.n_units, n_inputs=spec.n_inputs, chi_r=chi_r, chi_i=chi_i,
        spectral_radius=spec.spectral_radius, input_scaling=spec.input_scaling,
        seed=rng.derive_seed(spec.master_seed, label + "/reservoir"),
    ).fit()
    states = reservoir.run(inputs, collect_from=proto.washout)
    mc = memory_capacity_from_states(states, inputs[:, 0], proto.washout,
                                     proto.train_len, proto.n_delays,
                                     rcond=DEFAULT_RCOND)
    neff = effective_dimension(states[proto.train_len:])
    return mc, neff


def _sample_std(values: list[float]) -> float:
    if len(values) < 2:
        return 0.0
    return float(np.std(values, ddof=1))


def _run_cell(spec: SweepSpec, chi_r: int, chi_i: int):
    mcs, neffs, raw = [], [], []
    for k in range(spec.realizations):
        try:
            mc, neff = run_single(spec, chi_r, chi_i, k)
        except NumericError as exc:
            logger.warning("cell (%d, %d) realization %d failed: %s",
                           chi_r, chi_i, k, exc)
            continue
        mcs.append(mc.total)
        neffs.append(neff.value)
        raw.append(RawRecord(chi_r, chi_i, k, mc.total, neff.value,
                             float(mc.per_delay.min()), float(mc.per_delay.max())))
    n_ok = len(mcs)
    if n_ok == 0:
        logger.warning("cell (%d, %d): all %d realizations failed",
                       chi_r, chi_i, spec.realizations)
        record = SweepRecord(chi_r, chi_i, 0, math.nan, math.nan, math.nan, math.nan)
    else:
        record = SweepRecord(
            chi_r, chi_i, n_ok,
            float(np.mean(mcs)), _sample_std(mcs),
            float(np.mean(neffs)), _sample_std(neffs),
        )
    return record, raw


def run_sweep(spec: SweepSpec, workers: int = 1, collect_raw: bool = False):
    """Run the full grid; records come back in chi_r-major order.

    The output is byte-identical for any ``workers`` value: every cell's
    randomness comes from its own labeled streams and results are collected
    in grid order, not completion order.
    """
    spec.validate()
    cells = [(cr, ci) for cr in spec.chi_r_values for ci in spec.chi_i_values]
    results = Parallel(n_jobs=workers)(
        delayed(_run_cell)(spec, cr, ci) for cr, ci in cells)
    records = [rec for rec, _ in results]
    if collect_raw:
        raw = [r for _, cell_raw in results for r in cell_raw]
        return records, raw
    return records


@dataclass
class SummaryCurves:
    """Reductions of a sweep table for one metric.

    Each curve is a list of (connectivity, value) pairs; the normalized
    variants min-max rescale values to [0, 1] per curve (a constant curve
    maps to all zeros).
    """

    metric: str
    best_by_chi_i: list
    best_by_chi_r: list
    slice_chi_i_1: list
    best_by_chi_i_normalized: list
    best_by_chi_r_normalized: list
    slice_chi_i_1_normalized: list


def _minmax_normalize(curve):
    if not curve:
        return []
    values = [v for _, v in curve]
    lo, hi = min(values), max(values)
    if hi == lo:
        return [(c, 0.0) for c, _ in curve]
    return [(c, (v - lo) / (hi - lo)) for c, v in curve]


def summarize(records: list[SweepRecord], metric: str) -> SummaryCurves:
    """Best-per-axis curves and the maximally-sparse-input slice."""
    if metric not in ("mc", "neff"):
        raise ValueError(f"metric must be 'mc' or 'neff', got {metric!r}")
    usable = [r for r in records if r.n_ok > 0]
    if not usable:
        raise EmptySummaryError("no records with successful realizations to summarize")
    mean_of = (lambda r: r.mc_mean) if metric == "mc" else (lambda r: r.neff_mean)

    def best_by(axis_of):
        curve = {}
        for r in usable:
            key = axis_of(r)
            if key not in curve or mean_of(r) > curve[key]:
                curve[key] = mean_of(r)
        return sorted(curve.items())

    best_by_chi_i = best_by(lambda r: r.chi_i)
    best_by_chi_r = best_by(lambda r: r.chi_r)
    slice_chi_i_1 = sorted((r.chi_r, mean_of(r)) for r in usable if r.chi_i == 1)

    return SummaryCurves(
        metric=metric,
        best_by_chi_i=best_by_chi_i,
        best_by_chi_r=best_by_chi_r,
        slice_chi_i_1=slice_chi_i_1,
        best_by_chi_i_normalized=_minmax_normalize(best_by_chi_i),
        best_by_chi_r_normalized=_minmax_normalize(best_by_chi_r),
        slice_chi_i_1_normalized=_minmax_normalize(slice_chi_i_1),
    )
