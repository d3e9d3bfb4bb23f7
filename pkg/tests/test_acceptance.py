"""Acceptance gate: one test per advertised guarantee.

Each test prints a single pass/fail line (visible with -s or on failure);
runtime budgets are asserted alongside correctness.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from golden import EXAMPLE_322_8X8, THREE_ELLIPSE_8X8, coefficient_tables
from matrixcube.boundary import (degree_on_line, det_at,
                                 det_factorization_check, rz_line_check)
from matrixcube.builder import apply_A, build_lmi
from matrixcube.gallery import (EllipseSpec, example_322, m_ellipse_problem,
                                three_ellipse_problem)
from matrixcube.oracle import lmi_membership, vertex_membership
from matrixcube.solver import min_d, minimize_linear
from matrixcube.symmat import (SymMatrix, exact_array, kron, sym_eigen,
                               tensor_sum_many)

from test_builder import random_cube_problem

SEED = 0


class _Timer:
    def __init__(self, budget):
        self.budget = budget

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.start
        return False


def _report(name, ok, timer):
    line = f"criterion {name}: {'PASS' if ok else 'FAIL'} ({timer.elapsed:.2f}s)"
    print(line)
    assert ok, line
    assert timer.elapsed < timer.budget, f"{name}: over budget ({timer.elapsed:.1f}s)"


def _golden_match(lmi, rows):
    tables = coefficient_tables(rows)
    got = {"1": lmi.c_const.data, "d": lmi.c_d.data,
           "x1": lmi.c_x[0].data, "x2": lmi.c_x[1].data}
    return all(got[key][i, j] == tables[key][i][j]
               for key in tables for i in range(8) for j in range(8))


def test_criterion_01_golden_three_ellipse():
    with _Timer(1.0) as t:
        lmi = build_lmi(three_ellipse_problem())
        ok = lmi.dim == 8 and lmi.mode == "exact" and _golden_match(
            lmi, THREE_ELLIPSE_8X8)
    _report("1 golden 3-ellipse", ok, t)


def test_criterion_02_golden_example():
    with _Timer(1.0) as t:
        lmi = build_lmi(example_322())
        ok = lmi.dim == 8 and lmi.mode == "exact" and _golden_match(
            lmi, EXAMPLE_322_8X8)
    _report("2 golden worked example", ok, t)


def test_criterion_03_oracle_equivalence():
    rng = np.random.default_rng(SEED)
    disagreements = 0
    with _Timer(60.0) as t:
        for _ in range(10):
            m = int(rng.integers(1, 4))
            sizes = tuple(int(v) for v in rng.integers(1, 4, size=m))
            nvars = int(rng.integers(1, 4))
            prob = random_cube_problem(rng, n0=int(rng.integers(1, 4)),
                                       sizes=sizes, nvars=nvars)
            lmi = build_lmi(prob)
            probf = prob.to_float()
            for _ in range(1000):
                x = rng.uniform(-2, 2, size=nvars)
                d = float(rng.uniform(-5, 5))
                via_lmi = lmi_membership(lmi, x, d)
                via_vertex = vertex_membership(probf, x, d)
                scale = max(1.0, float(np.max(np.abs(lmi.eval_float(x, d)))))
                band = 1e-7 * scale
                if (abs(via_lmi.witness_eigenvalue) <= band
                        or abs(via_vertex.witness_eigenvalue) <= band):
                    continue
                if via_lmi.member != via_vertex.member:
                    disagreements += 1
    _report("3 oracle equivalence", disagreements == 0, t)


def test_criterion_04_determinant_factorization():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    with _Timer(30.0) as t:
        instances = [example_322()]
        for _ in range(5):
            sizes = tuple(int(v) for v in rng.integers(1, 4, size=rng.integers(1, 4)))
            instances.append(random_cube_problem(
                rng, n0=int(rng.integers(1, 4)), sizes=sizes, nvars=2))
        for prob in instances:
            lmi = build_lmi(prob)
            probf = prob.to_float()
            for _ in range(100):
                x = rng.uniform(-2, 2, size=2)
                d = float(rng.uniform(-3, 3))
                _, _, rel = det_factorization_check(probf, lmi, x, d)
                worst = max(worst, rel)
    _report("4 determinant factorization", worst <= 1e-8, t)


def test_criterion_05_degree_theorem():
    rng = np.random.default_rng(SEED)
    shapes = [(2, (2, 2)), (3, (2, 2)), (2, (2, 3)), (1, (2, 2, 2)), (3, (3, 2))]
    ok = True
    with _Timer(60.0) as t:
        for n0, sizes in shapes:
            prob = random_cube_problem(rng, n0=n0, sizes=sizes, nvars=2)
            lmi = build_lmi(prob)
            assert lmi.dim <= 64
            want = n0 * int(np.prod(sizes))
            degs = []
            for _ in range(5):
                base = [Fraction(int(v)) for v in rng.integers(-5, 6, size=3)]
                direction = [Fraction(int(v)) for v in rng.integers(-5, 6, size=3)]
                if all(v == 0 for v in direction):
                    direction[0] = Fraction(1)
                degs.append(degree_on_line(lmi, base, direction))
            ok = ok and max(degs) == want
    _report("5 degree theorem", ok, t)


def test_criterion_06_pinned_degree_values():
    with _Timer(30.0) as t:
        # fixed-d slice of the 3-ellipse bounds a degree-8 plane curve
        lmi3 = build_lmi(three_ellipse_problem())
        deg_curve = max(degree_on_line(lmi3, base, [3, 1, 0])
                        for base in ([Fraction(1, 7), Fraction(2, 9), 3],
                                     [0, 1, 4]))
        # worked 2x2x2 example bounds a degree-8 surface in (x, d)
        lmi322 = build_lmi(example_322())
        deg_surface = max(degree_on_line(lmi322, [1, 0, 2], v)
                          for v in ([2, -1, 3], [1, 1, 1]))
        # classical two-focus ellipse: degree 4 in (x, d)
        lmi2 = build_lmi(m_ellipse_problem(EllipseSpec.of([(0, 0), (1, 0)])))
        deg_ellipse = degree_on_line(lmi2, [Fraction(1, 3), Fraction(1, 5), 1],
                                     [2, 3, 5])
        # single focus with scalar weight: degree 2 = 2 * N0
        lmi1 = build_lmi(m_ellipse_problem(EllipseSpec.of([(0, 0)])))
        deg_disk = degree_on_line(lmi1, [1, 2, 5], [1, 1, 1])
        ok = (deg_curve, deg_surface, deg_ellipse, deg_disk) == (8, 8, 4, 2)
    _report("6 pinned degree values", ok, t)


def test_criterion_07_rigid_convexity():
    rng = np.random.default_rng(SEED)
    ok = True
    with _Timer(30.0) as t:
        cases = [(build_lmi(example_322()), [0.0, 0.0, 5.0]),
                 (build_lmi(three_ellipse_problem()), [0.2, 0.3, 3.0])]
        for lmi, interior in cases:
            for _ in range(100):
                direction = rng.normal(size=3)
                passed, _ = rz_line_check(lmi, interior, direction, tol=1e-7)
                ok = ok and passed
    _report("7 rigid convexity", ok, t)


def test_criterion_08_tensor_sum_laws():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    with _Timer(10.0) as t:
        for _ in range(100):
            mats = []
            for _ in range(3):
                k = int(rng.integers(1, 5))
                M = rng.normal(size=(k, k))
                mats.append(M + M.T)
            S = tensor_sum_many(mats)
            # eigenvalue-sum law
            sums = np.zeros(1)
            for M in mats:
                sums = np.add.outer(sums, np.linalg.eigvalsh(M)).ravel()
            got = np.linalg.eigvalsh(S)
            worst = max(worst, float(np.max(np.abs(np.sort(sums) - got))))
            # congruence identity: Q1 (x) Q2 (x) Q3 diagonalizes the sum
            Q = np.eye(1)
            diag = np.zeros(1)
            for M in mats:
                eig = sym_eigen(M)
                Q = np.kron(Q, eig.vectors)
                diag = np.add.outer(diag, eig.values).ravel()
            resid = Q.T @ S @ Q - np.diag(diag)
            worst = max(worst, float(np.max(np.abs(resid))))
    _report("8 tensor-sum eigenvalue laws", worst <= 1e-8, t)


def test_criterion_09_min_d_vs_distance_sum():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    foci_sets = [[(0, 0)], [(0, 0), (1, 0)], [(0, 0), (1, 0), (0, 1)]]
    with _Timer(30.0) as t:
        for foci in foci_sets:
            prob = m_ellipse_problem(EllipseSpec.of(foci))
            lmi = build_lmi(prob)
            for _ in range(50):
                x = rng.uniform(-2, 2, size=2)
                want = sum(float(np.hypot(x[0] - u, x[1] - v)) for u, v in foci)
                got = min_d(prob, lmi, x, tol=1e-7)
                worst = max(worst, abs(got - want))
    _report("9 min-d vs distance sum", worst <= 1e-6, t)


def test_criterion_10_optimizer_vs_grid():
    with _Timer(60.0) as t:
        prob = three_ellipse_problem()
        lmi = build_lmi(prob)
        report = minimize_linear(lmi, [0.0, -1.0], d_fixed=2.0,
                                 box=[(-2.0, 2.0), (-2.0, 2.0)])
        probf = prob.to_float()
        grid = np.linspace(-2.0, 2.0, 400)
        best = np.inf
        for x2 in grid:
            row = -x2
            if row >= best:
                continue  # no grid point in this row can improve the scan
            for x1 in grid:
                if vertex_membership(probf, [x1, x2], 2.0).member:
                    best = row
                    break
        ok = report.status == "optimal" and abs(report.value - best) <= 0.02
    _report("10 optimizer vs grid oracle", ok, t)


def test_criterion_11_congruence_invariance():
    rng = np.random.default_rng(SEED)
    ok = True
    with _Timer(10.0) as t:
        for _ in range(20):
            n0 = int(rng.integers(1, 4))
            count = int(rng.integers(2, 5))
            size = int(rng.integers(1, 4))
            A = []
            for _ in range(count):
                M = rng.integers(-4, 5, size=(n0, n0))
                A.append(SymMatrix.exact((M + M.T).tolist()))
            P = [exact_array(rng.integers(-4, 5, size=(size, size)).tolist())
                 for _ in range(count)]
            U = exact_array(rng.integers(-4, 5, size=(size, size)).tolist())
            lhs = apply_A([U.T @ Pk @ U for Pk in P], A)
            UI = kron(U, SymMatrix.identity(n0).data)
            rhs = UI.T @ apply_A(P, A) @ UI
            ok = ok and bool((lhs == rhs).all())
    _report("11 congruence invariance", ok, t)
