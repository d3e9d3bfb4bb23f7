"""Small dense two-phase simplex over exact rationals, Bland's rule.

Solves  minimize c.z  subject to  A z <= b,  z >= 0.  Problem sizes here
are tiny (a handful of variables, at most a few hundred cutting planes),
so a plain tableau with exact Fraction pivots is both fast enough and
immune to cycling and round-off.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _to_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    # floats are rationalized with a bounded denominator; the perturbation
    # (~1e-12 relative) stays inside the slack every caller allows
    return Fraction(float(v)).limit_denominator(10 ** 12)


def _pivot(T: List[List[Fraction]], basis: List[int], row: int, col: int) -> None:
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for r, line in enumerate(T):
        if r != row and line[col] != 0:
            factor = line[col]
            T[r] = [v - factor * w for v, w in zip(line, T[row])]
    basis[row] = col


def _bland_solve(T: List[List[Fraction]], basis: List[int],
                 ncols: int) -> str:
    """Run simplex iterations on a tableau whose last row is the objective."""
    while True:
        obj = T[-1]
        col = next((j for j in range(ncols) if obj[j] < 0), None)
        if col is None:
            return OPTIMAL
        best: Optional[Tuple[Fraction, int, int]] = None
        for r in range(len(T) - 1):
            a = T[r][col]
            if a > 0:
                ratio = T[r][-1] / a
                key = (ratio, basis[r])
                if best is None or key < (best[0], best[2]):
                    best = (ratio, r, basis[r])
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], col)


def solve_lp(c: Sequence, A_ub: Sequence[Sequence], b_ub: Sequence
             ) -> Tuple[str, Optional[List[Fraction]], Optional[Fraction]]:
    """Minimize c.z over {A z <= b, z >= 0}; returns (status, z, value)."""
    c = [_to_fraction(v) for v in c]
    A = [[_to_fraction(v) for v in row] for row in A_ub]
    b = [_to_fraction(v) for v in b_ub]
    n = len(c)
    m = len(A)

    # rows with negative rhs get a surplus + artificial variable; the rest
    # use their slack as the starting basic variable
    art_rows = [i for i in range(m) if b[i] < 0]
    nart = len(art_rows)
    ncols = n + m + nart  # structural | slack | artificial
    T: List[List[Fraction]] = []
    basis: List[int] = []
    art_col = {r: n + m + k for k, r in enumerate(art_rows)}
    for i in range(m):
        row = [Fraction(0)] * (ncols + 1)
        sign = -1 if b[i] < 0 else 1
        for j in range(n):
            row[j] = sign * A[i][j]
        row[n + i] = Fraction(sign)
        row[-1] = sign * b[i]
        if i in art_col:
            row[art_col[i]] = Fraction(1)
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        T.append(row)

    if nart:
        # phase 1: drive the artificial variables to zero
        obj = [Fraction(0)] * (ncols + 1)
        for r in art_rows:
            obj = [o - v for o, v in zip(obj, T[r])]
        for k in range(nart):
            obj[n + m + k] = Fraction(0)
        T.append(obj)
        _bland_solve(T, basis, ncols)  # phase-1 objective is bounded below by 0
        if -T[-1][-1] > 0:
            return INFEASIBLE, None, None
        T.pop()
        # pivot any artificial variable still basic out of the basis
        for r in range(m):
            if basis[r] >= n + m:
                col = next((j for j in range(n + m) if T[r][j] != 0), None)
                if col is not None:
                    _pivot(T, basis, r, col)

    # phase 2 objective expressed in the current basis
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(n):
        obj[j] = c[j]
    for r in range(m):
        if basis[r] < n and obj[basis[r]] != 0:
            factor = obj[basis[r]]
            obj = [o - factor * v for o, v in zip(obj, T[r])]
    T.append(obj)
    status = _bland_solve(T, basis, n + m)  # artificial columns stay out
    if status != OPTIMAL:
        return status, None, None

    z = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            z[basis[r]] = T[r][-1]
    value = sum(ci * zi for ci, zi in zip(c, z))
    return OPTIMAL, z, value
