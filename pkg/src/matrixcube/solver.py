"""Optimization over the feasible set: cutting planes and d-bisection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import simplex
from .builder import CubeProblem, LmiPencil
from .errors import DimensionError, NoFeasibleDError
from .oracle import default_tol, lmi_membership
from .symmat import sym_eigen

#: doubling / bisection search cap for min_d
D_CAP = 1e6

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"
STATUS_ITERATION_CAP = "iteration-cap"
STATUS_BOX_ACTIVE = "box-active"


@dataclass(frozen=True)
class Cut:
    """Affine inequality constant + coeff_d*d + coeff_x.x >= 0, valid on C."""

    constant: float
    coeff_d: float
    coeff_x: Tuple[float, ...]

    def value_at(self, x: Sequence[float], d: float) -> float:
        return self.constant + self.coeff_d * d + float(
            np.dot(self.coeff_x, np.asarray(x, dtype=float)))


@dataclass(frozen=True)
class SolveReport:
    status: str
    point: Tuple[Tuple[float, ...], float]
    value: float
    iterations: int
    final_gap: float


def separate(L: LmiPencil, x: Sequence[float], d: float,
             tol: Optional[float] = None) -> Optional[Cut]:
    """Eigenvector separation oracle.

    If L(x, d) has an eigenvalue below -tol, the Rayleigh functional
    (y, e) -> v' L(y, e) v of the corresponding unit eigenvector v is a
    valid affine inequality on C that is strictly violated at (x, d).
    """
    x = [float(v) for v in x]
    d = float(d)
    M = L.eval_float(x, d)
    if tol is None:
        tol = default_tol(float(np.max(np.abs(M))) if M.size else 1.0)
    eig = sym_eigen(M)
    if eig.values[0] >= -tol:
        return None
    v = eig.vectors[:, 0]
    stack = L.float_stack()  # (const, d, x1..xn)
    contractions = np.einsum("i,kij,j->k", v, stack, v)
    return Cut(constant=float(contractions[0]),
               coeff_d=float(contractions[1]),
               coeff_x=tuple(float(c) for c in contractions[2:]))


def minimize_linear(L: LmiPencil, c: Sequence[float], d_fixed: float,
                    box: Sequence[Tuple[float, float]],
                    tol: float = 1e-7, max_iters: int = 500) -> SolveReport:
    """Kelley cutting planes for min c.x over the fixed-d slice of C.

    The polyhedral outer approximation starts from the box and accumulates
    eigenvector cuts; each LP relaxation is solved exactly, so the LP value
    is always a valid lower bound.
    """
    n = L.nvars
    if len(c) != n or len(box) != n:
        raise DimensionError("c and box must have one entry per variable")
    lo = [float(l) for l, _ in box]
    hi = [float(h) for _, h in box]
    if any(h < l for l, h in zip(lo, hi)):
        raise DimensionError("empty box")

    cuts: List[Cut] = []
    x: List[float] = list(lo)
    value = float("nan")
    for it in range(1, max_iters + 1):
        # LP over z = x - lo >= 0:  z <= hi - lo  and  -g.z <= g.lo + const'
        A_ub: List[List[float]] = []
        b_ub: List[float] = []
        for i in range(n):
            row = [0.0] * n
            row[i] = 1.0
            A_ub.append(row)
            b_ub.append(hi[i] - lo[i])
        for cut in cuts:
            A_ub.append([-g for g in cut.coeff_x])
            b_ub.append(cut.constant + cut.coeff_d * d_fixed
                        + float(np.dot(cut.coeff_x, lo)))
        status, z, _ = simplex.solve_lp(list(c), A_ub, b_ub)
        if status == simplex.INFEASIBLE:
            return SolveReport(status=STATUS_INFEASIBLE,
                               point=(tuple(x), d_fixed), value=float("nan"),
                               iterations=it, final_gap=float("inf"))
        x = [l + float(zi) for l, zi in zip(lo, z)]
        value = float(np.dot(c, x))
        cut = separate(L, x, d_fixed, tol)
        if cut is None:
            # LP optimum is a lower bound and the point is feasible at tol
            on_box = any(abs(xi - l) <= 1e-9 * (1 + abs(l))
                         or abs(xi - h) <= 1e-9 * (1 + abs(h))
                         for xi, l, h in zip(x, lo, hi))
            status_out = STATUS_BOX_ACTIVE if on_box else STATUS_OPTIMAL
            return SolveReport(status=status_out, point=(tuple(x), d_fixed),
                               value=value, iterations=it, final_gap=0.0)
        cuts.append(cut)
    return SolveReport(status=STATUS_ITERATION_CAP, point=(tuple(x), d_fixed),
                       value=value, iterations=max_iters,
                       final_gap=float("inf"))


def min_d(prob: CubeProblem, L: LmiPencil, x: Sequence[float],
          tol: float = 1e-6) -> float:
    """Smallest d with (x, d) in C, by doubling search plus bisection.

    Requires membership to be monotone in d (A0 PSD), which the doubling
    search relies on.
    """
    x = [float(v) for v in x]

    def member(d: float) -> bool:
        return lmi_membership(L, x, d).member

    hi = 1.0
    while not member(hi):
        hi *= 2.0
        if hi > D_CAP:
            raise NoFeasibleDError(f"no feasible d found below {D_CAP:g}")
    lo = -1.0
    while member(lo):
        lo *= 2.0
        if lo < -D_CAP:
            raise NoFeasibleDError(f"membership persists below {-D_CAP:g}; "
                                   "d appears unbounded below")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if member(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
