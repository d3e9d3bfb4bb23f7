"""Constructors for the worked problem families used as fixtures.

Everything here returns exact-mode problems whenever the inputs are
rational, so golden tests can compare matrices entry-for-entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .builder import CubeProblem
from .errors import DimensionError, MatrixCubeError
from .pencil import MatrixPencil, block_diag_merge
from .symmat import EXACT, SymMatrix, as_fraction, exact_zeros


@dataclass(frozen=True)
class EllipseSpec:
    """Foci, positive weights and the optional matrix-valued weights."""

    foci: Tuple[Tuple[Fraction, ...], ...]
    weights: Tuple[Fraction, ...]
    N: int = 1
    A_list: Optional[Tuple[SymMatrix, ...]] = None

    @classmethod
    def of(cls, foci: Sequence[Sequence], weights: Optional[Sequence] = None,
           N: int = 1, A_list=None) -> "EllipseSpec":
        foci_f = tuple(tuple(as_fraction(c) for c in f) for f in foci)
        if weights is None:
            weights = [1] * len(foci_f)
        weights_f = tuple(as_fraction(w) for w in weights)
        if any(w <= 0 for w in weights_f):
            raise MatrixCubeError("ellipse weights must be positive")
        if len(weights_f) != len(foci_f):
            raise DimensionError("one weight per focus")
        return cls(foci=foci_f, weights=weights_f, N=N,
                   A_list=tuple(A_list) if A_list is not None else None)


def _ellipse_pencil(u: Fraction, v: Fraction) -> MatrixPencil:
    """2x2 pencil with eigenvalues +-dist((x1, x2), (u, v))."""
    return MatrixPencil((
        SymMatrix.exact([[-u, -v], [-v, u]]),
        SymMatrix.exact([[1, 0], [0, -1]]),
        SymMatrix.exact([[0, 1], [1, 0]]),
    ))


def m_ellipse_problem(spec: EllipseSpec) -> CubeProblem:
    """Planar m-ellipse: scalar A's, one 2x2 pencil per focus."""
    if any(len(f) != 2 for f in spec.foci):
        raise DimensionError("m_ellipse_problem needs planar foci")
    A = [SymMatrix.exact([[1]])]
    B = []
    for (u, v), w in zip(spec.foci, spec.weights):
        A.append(SymMatrix.exact([[w]]))
        B.append(_ellipse_pencil(u, v))
    return CubeProblem.build(nvars=2, A=A, B=B)


def arrow_pencil(focus: Sequence[Fraction]) -> MatrixPencil:
    """(n+1)x(n+1) arrow pencil with eigenvalues +-||x - u|| and n-1 zeros."""
    n = len(focus)
    const = exact_zeros(n + 1)
    for i, ui in enumerate(focus):
        const[0, i + 1] = -ui
        const[i + 1, 0] = -ui
    coeffs = [SymMatrix(const, EXACT)]
    for i in range(n):
        ci = exact_zeros(n + 1)
        ci[0, i + 1] = Fraction(1)
        ci[i + 1, 0] = Fraction(1)
        coeffs.append(SymMatrix(ci, EXACT))
    return MatrixPencil(tuple(coeffs))


def matrix_m_ellipsoid_problem(spec: EllipseSpec) -> CubeProblem:
    """Matrix m-ellipsoid: A0 = I_N, arrow pencils for the distances."""
    if spec.A_list is None:
        raise MatrixCubeError("matrix ellipsoid needs A_list (one PD matrix per focus)")
    if len(spec.A_list) != len(spec.foci):
        raise DimensionError("one A matrix per focus")
    for a in spec.A_list:
        if a.dim != spec.N:
            raise DimensionError("A matrices must be N x N")
        lam = float(np.linalg.eigvalsh(a.to_float().data)[0])
        if lam <= 0:
            raise MatrixCubeError(
                f"A matrices must be positive definite (lambda_min = {lam:.3e})")
    nvars = len(spec.foci[0])
    if any(len(f) != nvars for f in spec.foci):
        raise DimensionError("all foci must share one dimension")
    A = [SymMatrix.identity(spec.N, spec.A_list[0].mode)] + list(spec.A_list)
    B = [arrow_pencil(f) for f in spec.foci]
    return CubeProblem.build(nvars=nvars, A=A, B=B)


def example_322() -> CubeProblem:
    """The worked 2-variable instance with N0 = N1 = N2 = 2, exact integers."""
    A0 = SymMatrix.exact([[2, 1], [1, 2]])
    A1 = SymMatrix.exact([[1, 1], [1, 0]])
    A2 = SymMatrix.exact([[0, 1], [1, 1]])
    B1 = MatrixPencil((
        SymMatrix.exact([[3, -2], [-2, -1]]),
        SymMatrix.exact([[-1, 2], [2, 2]]),
        SymMatrix.exact([[2, -1], [-1, 0]]),
    ))
    B2 = MatrixPencil((
        SymMatrix.exact([[2, 1], [1, 3]]),
        SymMatrix.exact([[1, 3], [3, -2]]),
        SymMatrix.exact([[0, -1], [-1, 1]]),
    ))
    return CubeProblem.build(nvars=2, A=[A0, A1, A2], B=[B1, B2])


def diagonal_case_problem(A: Sequence[SymMatrix],
                          forms: Sequence[Sequence[Tuple[Sequence, object]]],
                          nvars: int) -> CubeProblem:
    """Diagonal pencils from affine forms.

    ``forms[k]`` lists the (b, beta) pairs for factor k; factor k becomes
    the diagonal pencil diag(b.x + beta, ...).
    """
    if len(forms) != len(A) - 1:
        raise DimensionError("one form group per A_k, k >= 1")
    B = []
    for group in forms:
        nk = len(group)
        if nk == 0:
            raise DimensionError("each factor needs at least one form")
        coeffs = []
        for slot in range(nvars + 1):
            data = exact_zeros(nk)
            for i, (b_vec, beta) in enumerate(group):
                if len(b_vec) != nvars:
                    raise DimensionError("form coefficient length must equal nvars")
                data[i, i] = as_fraction(beta) if slot == 0 else as_fraction(b_vec[slot - 1])
            coeffs.append(SymMatrix(data, EXACT))
        B.append(MatrixPencil(tuple(coeffs)))
    return CubeProblem.build(nvars=nvars, A=list(A), B=B)


@dataclass(frozen=True)
class TildeConstruction:
    """Merged-pencil problem plus sampled eigenvalue-ordering diagnostics."""

    problem: CubeProblem
    hypothesis_ok: bool
    violations: Tuple[str, ...] = field(default_factory=tuple)


def tilde_problem(A: Sequence[SymMatrix], B: Sequence[MatrixPencil],
                  E: Sequence[MatrixPencil],
                  probe_points: Sequence[Sequence[float]] = ()) -> TildeConstruction:
    """Asymmetric-bounds variant via block-diagonal merged pencils.

    The eigenvalue-ordering hypotheses (each E_k dominating B_k at the top
    and at the bottom of the spectrum) are only sampled at the probe
    points; violations are reported but the construction is still
    returned.
    """
    if len(B) != len(E):
        raise DimensionError("need one E pencil per B pencil")
    merged = [block_diag_merge(b, e) for b, e in zip(B, E)]
    nvars = merged[0].nvars if merged else 0
    problem = CubeProblem.build(nvars=nvars, A=list(A), B=merged)
    violations: List[str] = []
    for x in probe_points:
        for k, (b, e) in enumerate(zip(B, E)):
            b_lo, b_hi = b.eigen_range(x)
            e_lo, e_hi = e.eigen_range(x)
            if e_hi < b_hi - 1e-9:
                violations.append(
                    f"factor {k}: lambda_max(E) = {e_hi:.6g} < lambda_max(B) = {b_hi:.6g} at {list(x)}")
            if e_lo < b_lo - 1e-9:
                violations.append(
                    f"factor {k}: lambda_min(E) = {e_lo:.6g} < lambda_min(B) = {b_lo:.6g} at {list(x)}")
    return TildeConstruction(problem=problem, hypothesis_ok=not violations,
                             violations=tuple(violations))


#: the three-focus instance whose 8x8 LMI is pinned as a golden value
THREE_ELLIPSE_FOCI = ((0, 0), (1, 0), (0, 1))


def three_ellipse_problem() -> CubeProblem:
    return m_ellipse_problem(EllipseSpec.of(THREE_ELLIPSE_FOCI))
