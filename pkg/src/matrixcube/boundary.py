"""Analysis of the determinant r(x, d) = det L(x, d).

Covers exact and float determinant evaluation, the eigenvalue-tuple
factorization identity, degree measurement along rational lines, and the
real-rootedness (rigid convexity) check via a generalized eigenproblem.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np
import scipy.linalg

from .builder import CubeProblem, LmiPencil
from .errors import ModeError, NotInteriorError, ZeroPolynomialError
from .symmat import EXACT, FLOAT, SymMatrix, mode_of, sym_eigen


# ---------------------------------------------------------------------------
# determinants


def _det_bareiss(M: List[List[int]]) -> int:
    """Fraction-free (Bareiss) elimination; exact over the integers."""
    n = len(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i = M[i]
            row_k = M[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def det_exact(data: np.ndarray) -> Fraction:
    """Exact determinant of an object array of Fractions."""
    n = data.shape[0]
    denom_lcm = 1
    for v in data.flat:
        denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
    M = [[int(data[i, j] * denom_lcm) for j in range(n)] for i in range(n)]
    return Fraction(_det_bareiss(M), denom_lcm ** n)


def det_at(L: LmiPencil, x: Sequence, d):
    """det L(x, d); Fraction in exact mode, float otherwise."""
    M = L.eval(x, d)
    if M.mode == EXACT:
        return det_exact(M.data)
    return float(np.linalg.det(M.data))


def det_factorization_check(prob: CubeProblem, L: LmiPencil,
                            x: Sequence[float], d: float,
                            tol: float = 1e-9) -> Tuple[float, float, float]:
    """Compare det L against the product over eigenvalue index tuples.

    Returns (lhs, rhs, relative error) where
    rhs = prod over (j_1..j_m) of det(d*A0 + sum_k lambda_{j_k}(x) * A_k).
    """
    x = [float(v) for v in x]
    d = float(d)
    lhs = float(np.linalg.det(L.eval_float(x, d)))
    spectra = [sym_eigen(b.eval_float_sym(x), tol).values for b in prob.B]
    a0 = prob.A[0].to_float().data
    a_rest = [a.to_float().data for a in prob.A[1:]]
    rhs = 1.0
    for tup in itertools.product(*[range(len(s)) for s in spectra]):
        block = d * a0
        for spectrum, jk, ak in zip(spectra, tup, a_rest):
            block = block + spectrum[jk] * ak
        rhs *= float(np.linalg.det(block))
    rel = abs(lhs - rhs) / max(1.0, abs(lhs))
    return lhs, rhs, rel


# ---------------------------------------------------------------------------
# line restrictions


@dataclass(frozen=True)
class LineRestriction:
    """Samples of alpha -> det L(base + alpha * direction)."""

    base: Tuple
    direction: Tuple
    samples: Tuple[Tuple[Fraction, Fraction], ...]


def _interp_nodes(count: int) -> List[Fraction]:
    """0, 1, -1, 2, -2, ...; deterministic with small numerators."""
    nodes = [Fraction(0)]
    k = 1
    while len(nodes) < count:
        nodes.append(Fraction(k))
        if len(nodes) < count:
            nodes.append(Fraction(-k))
        k += 1
    return nodes


def poly_from_samples(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> List[Fraction]:
    """Exact monomial coefficients (ascending) through the given samples."""
    n = len(xs)
    dd = list(ys)
    newton = [dd[0]]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
        newton.append(dd[j])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # product (t - xs[0]) ... (t - xs[j-1])
    for j, c in enumerate(newton):
        for i, b in enumerate(basis):
            coeffs[i] += c * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i] -= xs[j] * b
            nxt[i + 1] += b
        basis = nxt
    return coeffs


def restrict_det(L: LmiPencil, base: Sequence, direction: Sequence) -> LineRestriction:
    """Sample det L along a line at dim + 1 exact rational nodes."""
    if L.mode != EXACT:
        raise ModeError("exact mode required for line interpolation")
    if len(base) != L.nvars + 1 or len(direction) != L.nvars + 1:
        raise ValueError("base and direction live in (x_1..x_n, d) space")
    base_f = [Fraction(v) if not isinstance(v, Fraction) else v for v in base]
    dir_f = [Fraction(v) if not isinstance(v, Fraction) else v for v in direction]
    if all(v == 0 for v in dir_f):
        raise ValueError("direction must be nonzero")
    samples = []
    for alpha in _interp_nodes(L.dim + 1):
        point = [b + alpha * v for b, v in zip(base_f, dir_f)]
        samples.append((alpha, det_at(L, point[:-1], point[-1])))
    return LineRestriction(base=tuple(base_f), direction=tuple(dir_f),
                           samples=tuple(samples))


def degree_on_line(L: LmiPencil, base: Sequence, direction: Sequence) -> int:
    """Exact degree of det L restricted to a line.

    Interpolates at dim + 1 rational nodes and returns the index of the
    highest coefficient that is exactly nonzero.
    """
    line = restrict_det(L, base, direction)
    xs = [s[0] for s in line.samples]
    ys = [s[1] for s in line.samples]
    coeffs = poly_from_samples(xs, ys)
    for i in range(len(coeffs) - 1, -1, -1):
        if coeffs[i] != 0:
            return i
    raise ZeroPolynomialError("determinant vanishes identically on this line")


# ---------------------------------------------------------------------------
# real-rootedness


def rz_line_check(L: LmiPencil, interior: Sequence[float],
                  direction: Sequence[float],
                  tol: float = 1e-7) -> Tuple[bool, List[complex]]:
    """Check that det L(w + alpha*v) has only real roots in alpha.

    Roots are recovered from the generalized eigenvalues beta of the
    pencil (L(w), V) with V the direction matrix: det(L(w) - beta*V) = 0
    gives the roots alpha = -beta.  Infinite eigenvalues correspond to a
    degree drop and are dropped.  Reality is judged by
    |imag| <= tol * (1 + |real|).
    """
    if len(interior) != L.nvars + 1:
        raise ValueError("interior point lives in (x_1..x_n, d) space")
    x = [float(v) for v in interior[:-1]]
    d = float(interior[-1])
    W = L.eval_float(x, d)
    lam_min = float(np.linalg.eigvalsh(0.5 * (W + W.T))[0])
    if lam_min <= 0:
        raise NotInteriorError(
            f"base point is not strictly interior (lambda_min = {lam_min:.3e})")
    V = L.direction_matrix([float(v) for v in direction]).data
    w = scipy.linalg.eig(W, V, right=False, homogeneous_eigvals=True)
    roots = []
    for a, b in zip(w[0], w[1]):
        if abs(b) <= 1e-10 * (abs(a) + abs(b)):
            continue  # infinite eigenvalue: degree drop along this line
        roots.append(complex(-a / b))
    all_real = all(abs(r.imag) <= tol * (1.0 + abs(r.real)) for r in roots)
    return all_real, roots
