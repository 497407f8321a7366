"""Exception types shared across the package.

Validation failures carry the offending magnitude so callers (and the CLI)
can report how far a matrix is from being a physical state.
"""


class DensityMatrixError(ValueError):
    """Base class for failed density-matrix checks."""

    exit_code = 1

    def __init__(self, magnitude, message=None):
        self.magnitude = float(magnitude)
        super().__init__(message or f"{type(self).__name__}({self.magnitude:.6g})")


class NotHermitian(DensityMatrixError):
    exit_code = 2


class TraceNotUnit(DensityMatrixError):
    exit_code = 3


class NotPositive(DensityMatrixError):
    exit_code = 4


class NoConvergence(RuntimeError):
    def __init__(self, sweeps, residual):
        self.sweeps = sweeps
        self.residual = residual
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )


class DimensionMismatch(ValueError):
    pass


class EmptyKeepSet(ValueError):
    pass


class InvalidDimension(ValueError):
    pass


class ParseError(ValueError):
    pass
