from fractions import Fraction

import pytest

from matrixcube.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


def test_simple_bounded_min():
    # min -x - y  s.t. x <= 2, y <= 3, x + y <= 4
    status, z, value = solve_lp([-1, -1], [[1, 0], [0, 1], [1, 1]], [2, 3, 4])
    assert status == OPTIMAL
    assert value == -4
    assert z[0] + z[1] == 4


def test_negative_rhs_needs_phase_one():
    # min x  s.t. -x <= -3  (i.e. x >= 3)
    status, z, value = solve_lp([1], [[-1]], [-3])
    assert status == OPTIMAL
    assert value == 3


def test_infeasible():
    # x >= 3 and x <= 1
    status, z, value = solve_lp([1], [[-1], [1]], [-3, 1])
    assert status == INFEASIBLE
    assert z is None


def test_unbounded():
    status, _, _ = solve_lp([-1], [[0]], [1])
    assert status == UNBOUNDED


def test_exact_rational_answer():
    # min -x  s.t. 3x <= 1
    status, z, value = solve_lp([-1], [[3]], [1])
    assert status == OPTIMAL
    assert z[0] == Fraction(1, 3)
    assert value == Fraction(-1, 3)


def test_two_variable_vertex():
    # min -2x - y  s.t. x + y <= 3, x <= 2
    status, z, value = solve_lp([-2, -1], [[1, 1], [1, 0]], [3, 2])
    assert status == OPTIMAL
    assert (z[0], z[1]) == (2, 1)
    assert value == -5


def test_degenerate_does_not_cycle():
    # redundant constraints create degeneracy; Bland's rule must terminate
    status, z, value = solve_lp(
        [-1, -1],
        [[1, 0], [1, 0], [0, 1], [1, 1], [1, 1]],
        [1, 1, 1, 2, 2])
    assert status == OPTIMAL
    assert value == -2


def test_float_inputs_are_rationalized():
    status, z, value = solve_lp([1.0], [[-1.0]], [-0.5])
    assert status == OPTIMAL
    assert abs(float(value) - 0.5) < 1e-9
