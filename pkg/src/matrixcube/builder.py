"""Assembly of the big LMI pencil L(x, d) from a matrix cube problem.

The construction tensor-sums the slot for d with the slots for the input
pencils B_1(x) .. B_m(x) and then replaces the k-th formal coefficient by
a Kronecker factor A_k on the right.  Concretely,

    L(x, d) = d * (I_{N1...Nm} (x) A0)
            + sum_k (I_{N1..N(k-1)} (x) B_k(x) (x) I_{N(k+1)..Nm}) (x) A_k

with the A-factor innermost.  This ordering is pinned by golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .errors import DimensionError, ModeError
from .pencil import MatrixPencil, coerce_vector
from .symmat import (EXACT, FLOAT, SymMatrix, identity, kron, mode_of)


@dataclass(frozen=True)
class CubeProblem:
    """Input datum: matrices A_0..A_m and pencils B_1(x)..B_m(x).

    ``nvars`` is carried explicitly so that the m = 0 case still knows its
    ambient x-space.
    """

    nvars: int
    A: Tuple[SymMatrix, ...]
    B: Tuple[MatrixPencil, ...]

    def __post_init__(self):
        if not self.A:
            raise DimensionError("need at least A0")
        if len(self.B) != len(self.A) - 1:
            raise DimensionError("need exactly one pencil per A_k, k >= 1")
        n0 = self.A[0].dim
        mode = self.A[0].mode
        for a in self.A:
            if a.dim != n0:
                raise DimensionError("all A_k must have the same size")
            if a.mode != mode:
                raise ModeError("all A_k must share one scalar mode")
        for b in self.B:
            if b.nvars != self.nvars:
                raise DimensionError("every pencil must have nvars variables")
            if b.mode != mode:
                raise ModeError("pencils and A-matrices must share one scalar mode")

    @classmethod
    def build(cls, nvars, A, B) -> "CubeProblem":
        return cls(nvars=nvars, A=tuple(A), B=tuple(B))

    @property
    def m(self) -> int:
        return len(self.B)

    @property
    def n0(self) -> int:
        return self.A[0].dim

    @property
    def mode(self) -> str:
        return self.A[0].mode

    @property
    def factor_dims(self) -> Tuple[int, ...]:
        return tuple(b.dim for b in self.B)

    def to_float(self) -> "CubeProblem":
        return CubeProblem(self.nvars,
                           tuple(a.to_float() for a in self.A),
                           tuple(b.to_float() for b in self.B))


@dataclass(frozen=True)
class LmiPencil:
    """L(x, d) stored as constant coefficient matrices for 1, d, x_1..x_n."""

    nvars: int
    c_const: SymMatrix
    c_d: SymMatrix
    c_x: Tuple[SymMatrix, ...]

    def __post_init__(self):
        dim = self.c_const.dim
        mode = self.c_const.mode
        for c in (self.c_d,) + self.c_x:
            if c.dim != dim:
                raise DimensionError("LMI coefficient sizes differ")
            if c.mode != mode:
                raise ModeError("LMI coefficient modes differ")
        if len(self.c_x) != self.nvars:
            raise DimensionError("need one coefficient matrix per variable")

    @property
    def dim(self) -> int:
        return self.c_const.dim

    @property
    def mode(self) -> str:
        return self.c_const.mode

    def coefficients(self) -> Tuple[SymMatrix, ...]:
        """(c_const, c_d, c_x1, ..., c_xn)."""
        return (self.c_const, self.c_d) + self.c_x

    def eval(self, x: Sequence, d) -> SymMatrix:
        if len(x) != self.nvars:
            raise DimensionError(
                f"LMI pencil has {self.nvars} variables, point has {len(x)}")
        point, out_mode = coerce_vector(list(x) + [d], self.mode)
        if out_mode == FLOAT:
            return SymMatrix(self.eval_float(point[:-1], point[-1]), FLOAT)
        acc = self.c_const.data + point[-1] * self.c_d.data
        for xi, c in zip(point[:-1], self.c_x):
            if xi:
                acc = acc + xi * c.data
        return SymMatrix(acc, EXACT)

    def eval_float(self, x: Sequence, d: float) -> np.ndarray:
        stack = self.float_stack()
        vec = np.empty(2 + self.nvars)
        vec[0] = 1.0
        vec[1] = d
        vec[2:] = x
        return np.tensordot(vec, stack, axes=1)

    def float_stack(self) -> np.ndarray:
        """Cached float array of shape (n + 2, dim, dim) in coefficient order."""
        cached = self.__dict__.get("_stack")
        if cached is None:
            cached = np.stack([c.to_float().data for c in self.coefficients()])
            self.__dict__["_stack"] = cached
        return cached

    def direction_matrix(self, direction: Sequence):
        """sum_i v_i * c_xi + v_d * c_d for a direction (v_1..v_n, v_d)."""
        if len(direction) != self.nvars + 1:
            raise DimensionError("direction must have n + 1 entries (x..., d)")
        vs, out_mode = coerce_vector(direction, self.mode)
        coeffs = self.c_x + (self.c_d,)
        if out_mode != self.mode:
            coeffs = tuple(c.to_float() for c in coeffs)
        acc = None
        for v, c in zip(vs, coeffs):
            term = v * c.data
            acc = term if acc is None else acc + term
        return SymMatrix(acc, out_mode)

    def to_float(self) -> "LmiPencil":
        if self.mode == FLOAT:
            return self
        return LmiPencil(self.nvars, self.c_const.to_float(),
                         self.c_d.to_float(),
                         tuple(c.to_float() for c in self.c_x))


def eval_lmi(L: LmiPencil, x: Sequence, d) -> SymMatrix:
    return L.eval(x, d)


def apply_A(P: Sequence[np.ndarray], A: Sequence[SymMatrix]) -> np.ndarray:
    """The operator replacing the k-th formal coefficient by (x) A_k.

    apply_A(P, A) = sum_k kron(P_k, A_k).
    """
    if len(P) != len(A):
        raise DimensionError("need one coefficient matrix per A_k")
    if not P:
        raise DimensionError("empty coefficient list")
    size = P[0].shape[0]
    acc = None
    for Pk, Ak in zip(P, A):
        Pk = np.asarray(Pk) if not isinstance(Pk, np.ndarray) else Pk
        if Pk.shape != (size, size):
            raise DimensionError("coefficient matrices differ in size")
        term = kron(Pk, Ak.data)
        acc = term if acc is None else acc + term
    return acc


def _slot_embed(M: np.ndarray, pre: int, post: int, mode: str) -> np.ndarray:
    out = M
    if pre > 1:
        out = kron(identity(pre, mode), out)
    if post > 1:
        out = kron(out, identity(post, mode))
    return out


def build_lmi(prob: CubeProblem) -> LmiPencil:
    """Build the explicit LMI pencil for a cube problem.

    Exact inputs yield an exact pencil, which the golden tests compare
    entry-for-entry against the matrices printed for the worked examples.
    """
    mode = prob.mode
    dims = prob.factor_dims
    outer = 1
    for nk in dims:
        outer *= nk
    dim = outer * prob.n0

    c_d = SymMatrix(kron(identity(outer, mode), prob.A[0].data)
                    if outer > 1 else prob.A[0].data.copy(), mode)
    const_acc = SymMatrix.zeros(dim, mode).data
    x_acc = [SymMatrix.zeros(dim, mode).data for _ in range(prob.nvars)]

    for k, bk in enumerate(prob.B):
        pre = 1
        for nj in dims[:k]:
            pre *= nj
        post = 1
        for nj in dims[k + 1:]:
            post *= nj
        ak = prob.A[k + 1].data
        for slot, coeff in enumerate(bk.coeffs):
            embedded = kron(_slot_embed(coeff.data, pre, post, mode), ak)
            if slot == 0:
                const_acc = const_acc + embedded
            else:
                x_acc[slot - 1] = x_acc[slot - 1] + embedded

    return LmiPencil(nvars=prob.nvars,
                     c_const=SymMatrix(const_acc, mode),
                     c_d=c_d,
                     c_x=tuple(SymMatrix(a, mode) for a in x_acc))
