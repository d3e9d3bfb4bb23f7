"""Symmetric matrices, Kronecker products, tensor sums and eigendecomposition.

Two scalar modes are supported throughout the package:

* ``exact``  -- entries are :class:`fractions.Fraction`, stored in an
  object-dtype numpy array.  All construction-time algebra is bit-exact.
* ``float``  -- entries are float64.  The eigensolver exists only here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DimensionError, EigenSolverError, ModeError, SymmetryError

EXACT = "exact"
FLOAT = "float"

Scalar = Union[int, Fraction, float]

#: asymmetry slack for float-mode matrices, relative to the largest entry
SYMMETRY_RTOL = 1e-12


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value)
    raise ModeError(f"cannot interpret {value!r} as an exact rational")


def mode_of(data: np.ndarray) -> str:
    return EXACT if data.dtype == object else FLOAT


def _check_same_mode(*arrays: np.ndarray) -> str:
    modes = {mode_of(a) for a in arrays}
    if len(modes) != 1:
        raise ModeError("operands mix exact and float scalar modes")
    return modes.pop()


def exact_array(rows: Iterable[Iterable]) -> np.ndarray:
    """Build an object-dtype array of Fractions from nested rows."""
    data = [[as_fraction(v) for v in row] for row in rows]
    arr = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        if len(row) != len(data[0]):
            raise DimensionError("ragged rows in matrix literal")
        for j, v in enumerate(row):
            arr[i, j] = v
    return arr


def exact_identity(dim: int) -> np.ndarray:
    arr = np.full((dim, dim), Fraction(0), dtype=object)
    for i in range(dim):
        arr[i, i] = Fraction(1)
    return arr


def exact_zeros(dim: int) -> np.ndarray:
    return np.full((dim, dim), Fraction(0), dtype=object)


def identity(dim: int, mode: str) -> np.ndarray:
    return exact_identity(dim) if mode == EXACT else np.eye(dim)


def maxabs(data: np.ndarray) -> float:
    if data.size == 0:
        return 0.0
    if mode_of(data) == EXACT:
        return float(max(abs(v) for v in data.flat))
    return float(np.max(np.abs(data)))


def kron(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Kronecker product: block (i, j) of the result is F[i, j] * G."""
    if F.ndim != 2 or F.shape[0] != F.shape[1]:
        raise DimensionError(f"kron needs square factors, got shape {F.shape}")
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise DimensionError(f"kron needs square factors, got shape {G.shape}")
    _check_same_mode(F, G)
    return np.kron(F, G)


def tensor_sum(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """Kronecker sum F (x) I_s + I_r (x) G; eigenvalues are pairwise sums."""
    mode = _check_same_mode(F, G)
    r, s = F.shape[0], G.shape[0]
    return kron(F, identity(s, mode)) + kron(identity(r, mode), G)


def tensor_sum_many(Ms: Sequence[np.ndarray]) -> np.ndarray:
    """Left-associated fold of tensor_sum over a nonempty list."""
    if not Ms:
        raise DimensionError("tensor_sum_many needs at least one matrix")
    acc = Ms[0]
    for M in Ms[1:]:
        acc = tensor_sum(acc, M)
    return acc


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense square symmetric matrix in one of the two scalar modes."""

    data: np.ndarray
    mode: str

    def __post_init__(self):
        d = self.data
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise DimensionError(f"SymMatrix needs a square array, got {d.shape}")
        if d.shape[0] < 1:
            raise DimensionError("SymMatrix dimension must be >= 1")
        if mode_of(d) != self.mode:
            raise ModeError(f"array dtype does not match declared mode {self.mode!r}")
        if self.mode == EXACT:
            if not (d == d.T).all():
                raise SymmetryError("exact-mode matrix is not symmetric")
        else:
            slack = SYMMETRY_RTOL * max(1.0, maxabs(d))
            if np.max(np.abs(d - d.T)) > slack:
                raise SymmetryError("float-mode matrix is not symmetric within 1e-12")

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact(cls, rows: Iterable[Iterable]) -> "SymMatrix":
        return cls(exact_array(rows), EXACT)

    @classmethod
    def from_float(cls, rows) -> "SymMatrix":
        return cls(np.asarray(rows, dtype=float), FLOAT)

    @classmethod
    def identity(cls, dim: int, mode: str = EXACT) -> "SymMatrix":
        return cls(identity(dim, mode), mode)

    @classmethod
    def zeros(cls, dim: int, mode: str = EXACT) -> "SymMatrix":
        data = exact_zeros(dim) if mode == EXACT else np.zeros((dim, dim))
        return cls(data, mode)

    # -- queries -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def maxabs(self) -> float:
        return maxabs(self.data)

    def to_float(self) -> "SymMatrix":
        if self.mode == FLOAT:
            return self
        return SymMatrix(self.data.astype(float), FLOAT)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.mode == other.mode and self.data.shape == other.data.shape \
            and bool((self.data == other.data).all())

    def __repr__(self) -> str:
        return f"SymMatrix(dim={self.dim}, mode={self.mode})"


@dataclass(frozen=True)
class EigenDecomposition:
    """Ascending eigenvalues and an orthogonal eigenvector matrix."""

    values: np.ndarray
    vectors: np.ndarray


def sym_eigen(M, tol: float = 1e-9) -> EigenDecomposition:
    """Eigendecomposition of a float-mode symmetric matrix.

    Eigenvalues come back ascending; each eigenvector's sign is fixed by
    making its largest-magnitude entry positive, so the output is
    deterministic for a fixed input.
    """
    data = M.data if isinstance(M, SymMatrix) else np.asarray(M)
    if mode_of(data) != FLOAT:
        raise ModeError("sym_eigen requires float mode")
    scale = max(1.0, maxabs(data))
    if np.max(np.abs(data - data.T)) > tol * scale:
        raise SymmetryError("matrix is not symmetric within tol")
    sym = 0.5 * (data + data.T)
    try:
        values, vectors = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver did not converge: {exc}") from exc
    for j in range(vectors.shape[1]):
        k = int(np.argmax(np.abs(vectors[:, j])))
        if vectors[k, j] < 0:
            vectors[:, j] = -vectors[:, j]
    return EigenDecomposition(values=values, vectors=vectors)
