"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class NumericError(RuntimeError):
    """A numeric kernel failed (non-convergence, degenerate data)."""


class DegenerateSpectrumError(NumericError):
    """Spectral radius is (numerically) zero; rescaling cannot hit a target."""


class DegenerateTrajectoryError(NumericError):
    """State trajectory carries no variance; metrics are undefined."""


class ProtocolConfigError(ValueError):
    """Experiment protocol lengths are inconsistent."""


class GridShapeError(ValueError):
    """Sweep records do not form a full rectangular grid."""


class EmptySummaryError(ValueError):
    """No records available to summarize."""
