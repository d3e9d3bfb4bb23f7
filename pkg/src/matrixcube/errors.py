"""Exception hierarchy shared across the package."""


class MatrixCubeError(Exception):
    """Base class for all domain errors."""


class ModeError(MatrixCubeError):
    """Scalar modes (exact vs float) of operands do not match."""


class DimensionError(MatrixCubeError):
    """Matrix or vector dimensions are incompatible."""


class SymmetryError(MatrixCubeError):
    """A matrix that must be symmetric is not."""


class EigenSolverError(MatrixCubeError):
    """The symmetric eigensolver failed to converge."""


class EnumerationLimitError(MatrixCubeError):
    """The 2^m vertex enumeration cap was exceeded."""


class ZeroPolynomialError(MatrixCubeError):
    """A line restriction of the determinant vanished identically."""


class NotInteriorError(MatrixCubeError):
    """A base point required to be strictly interior is not."""


class NoFeasibleDError(MatrixCubeError):
    """No feasible d was found below the search cap, or d is unbounded below."""


class DataError(MatrixCubeError):
    """A problem document failed validation."""
