"""Two independent membership tests for the convex set C.

The LMI test evaluates the assembled pencil and checks positive
semidefiniteness.  The vertex test goes back to the definition: an affine
pencil in t is PSD on a box iff it is PSD at the box's 2^m vertices, so it
enumerates all sign patterns of extreme eigenvalues of the B_k(x).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .builder import CubeProblem, LmiPencil
from .errors import EnumerationLimitError
from .symmat import FLOAT, SymMatrix, sym_eigen

#: relative eigenvalue tolerance used when no explicit tol is given
DEFAULT_RTOL = 1e-8

#: vertex enumeration cap: 2^m patterns
MAX_CUBE_FACTORS = 25


def default_tol(scale: float) -> float:
    return DEFAULT_RTOL * max(1.0, scale)


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witness_eigenvalue: float
    witness_vertex: Optional[Tuple[str, ...]] = None


def psd_check(M, tol: Optional[float] = None) -> Tuple[bool, float]:
    """(is PSD within tol, lambda_min)."""
    data = M.data if isinstance(M, SymMatrix) else np.asarray(M, dtype=float)
    if tol is None:
        tol = default_tol(float(np.max(np.abs(data))) if data.size else 1.0)
    lam_min = float(np.linalg.eigvalsh(0.5 * (data + data.T))[0])
    return lam_min >= -tol, lam_min


def lmi_membership(L: LmiPencil, x: Sequence[float], d: float,
                   tol: Optional[float] = None) -> MembershipVerdict:
    M = L.eval_float([float(v) for v in x], float(d))
    ok, lam = psd_check(M, tol)
    return MembershipVerdict(member=ok, witness_eigenvalue=lam)


def vertex_membership(prob: CubeProblem, x: Sequence[float], d: float,
                      tol: Optional[float] = None) -> MembershipVerdict:
    """Brute-force oracle over all 2^m cube vertices.

    For each sign pattern, t_k is set to the min or max eigenvalue of
    B_k(x) and d*A0 + sum t_k*A_k is tested for PSD-ness.  Member iff all
    patterns pass; the first failing pattern is recorded.
    """
    if prob.m > MAX_CUBE_FACTORS:
        raise EnumerationLimitError(
            f"vertex enumeration needs 2^{prob.m} patterns (cap 2^{MAX_CUBE_FACTORS})")
    x = [float(v) for v in x]
    ranges = [b.eigen_range(x) for b in prob.B]
    a0 = prob.A[0].to_float().data
    a_rest = [a.to_float().data for a in prob.A[1:]]

    worst = float("inf")
    for pattern in itertools.product(("min", "max"), repeat=prob.m):
        M = float(d) * a0
        for (lo, hi), choice, ak in zip(ranges, pattern, a_rest):
            t = lo if choice == "min" else hi
            M = M + t * ak
        ok, lam = psd_check(M, tol)
        worst = min(worst, lam)
        if not ok:
            return MembershipVerdict(member=False, witness_eigenvalue=lam,
                                     witness_vertex=pattern)
    return MembershipVerdict(member=True, witness_eigenvalue=worst)
