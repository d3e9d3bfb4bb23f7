"""Affine symmetric-matrix-valued maps x -> B0 + x1*B1 + ... + xn*Bn."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from .errors import DimensionError, ModeError
from .symmat import EXACT, FLOAT, SymMatrix, as_fraction, sym_eigen


def coerce_vector(x: Sequence, mode: str):
    """Coerce a point to the pencil's scalar mode.

    Float entries force float mode regardless of the pencil mode; exact
    pencils evaluated at float points are demoted to float results.
    """
    if mode == EXACT and all(not isinstance(v, float) for v in x):
        return [as_fraction(v) for v in x], EXACT
    return [float(v) for v in x], FLOAT


@dataclass(frozen=True)
class MatrixPencil:
    """B(x) = coeffs[0] + sum_i x_i * coeffs[i]; constant term first."""

    coeffs: Tuple[SymMatrix, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise DimensionError("a pencil needs at least a constant term")
        dim = self.coeffs[0].dim
        mode = self.coeffs[0].mode
        for c in self.coeffs:
            if c.dim != dim:
                raise DimensionError("pencil coefficients differ in size")
            if c.mode != mode:
                raise ModeError("pencil coefficients differ in scalar mode")

    @classmethod
    def from_matrices(cls, coeffs) -> "MatrixPencil":
        return cls(tuple(coeffs))

    @property
    def nvars(self) -> int:
        return len(self.coeffs) - 1

    @property
    def dim(self) -> int:
        return self.coeffs[0].dim

    @property
    def mode(self) -> str:
        return self.coeffs[0].mode

    def to_float(self) -> "MatrixPencil":
        if self.mode == FLOAT:
            return self
        return MatrixPencil(tuple(c.to_float() for c in self.coeffs))

    def eval(self, x: Sequence) -> SymMatrix:
        if len(x) != self.nvars:
            raise DimensionError(
                f"pencil has {self.nvars} variables, point has {len(x)}")
        xs, out_mode = coerce_vector(x, self.mode)
        coeffs = self.coeffs if out_mode == self.mode else tuple(
            c.to_float() for c in self.coeffs)
        acc = coeffs[0].data.copy()
        for xi, c in zip(xs, coeffs[1:]):
            if xi:
                acc = acc + xi * c.data
        return SymMatrix(acc, out_mode)

    __call__ = eval

    def eval_float(self, x: Sequence) -> np.ndarray:
        """Fast float evaluation via a cached coefficient stack."""
        stack = self._float_stack()
        vec = np.empty(len(self.coeffs))
        vec[0] = 1.0
        vec[1:] = x
        return np.tensordot(vec, stack, axes=1)

    def _float_stack(self) -> np.ndarray:
        cached = self.__dict__.get("_stack")
        if cached is None:
            cached = np.stack([c.to_float().data for c in self.coeffs])
            self.__dict__["_stack"] = cached
        return cached

    def eigen_range(self, x: Sequence, tol: float = 1e-9):
        """(lambda_min, lambda_max) of B(x); float mode only."""
        values = sym_eigen(self.eval_float_sym(x), tol).values
        return float(values[0]), float(values[-1])

    def eval_float_sym(self, x: Sequence) -> SymMatrix:
        return SymMatrix(self.eval_float([float(v) for v in x]), FLOAT)


def block_diag_merge(b: MatrixPencil, e: MatrixPencil) -> MatrixPencil:
    """Coefficient-wise block-diagonal stacking diag(B(x), E(x))."""
    if b.nvars != e.nvars:
        raise DimensionError("pencils differ in number of variables")
    if b.mode != e.mode:
        raise ModeError("pencils differ in scalar mode")
    merged = []
    for cb, ce in zip(b.coeffs, e.coeffs):
        if b.mode == EXACT:
            data = np.full((b.dim + e.dim, b.dim + e.dim), Fraction(0), dtype=object)
        else:
            data = np.zeros((b.dim + e.dim, b.dim + e.dim))
        data[:b.dim, :b.dim] = cb.data
        data[b.dim:, b.dim:] = ce.data
        merged.append(SymMatrix(data, b.mode))
    return MatrixPencil(tuple(merged))


def constant_pencil(matrix: SymMatrix, nvars: int) -> MatrixPencil:
    """A pencil with the given constant term and zero variable coefficients."""
    zeros = SymMatrix.zeros(matrix.dim, matrix.mode)
    return MatrixPencil((matrix,) + (zeros,) * nvars)
