"""Exact feasibility solver: A x = b, x >= 0 over rationals."""

import random
from fractions import Fraction

import pytest

from matchcover.lpfeas import solve_nonneg

F = Fraction


def check(A, b, x):
    assert all(v >= 0 for v in x)
    for row, rhs in zip(A, b):
        assert sum(F(a) * v for a, v in zip(row, x)) == F(rhs)


def test_identity_system():
    A = [[1, 0], [0, 1]]
    b = [F(2, 3), F(5)]
    x = solve_nonneg(A, b)
    assert x == [F(2, 3), F(5)]


def test_single_equation_many_solutions():
    A = [[1, 1, 1]]
    b = [1]
    x = solve_nonneg(A, b)
    check(A, b, x)


def test_infeasible_contradiction():
    assert solve_nonneg([[1, 1], [1, 1]], [1, 3]) is None


def test_infeasible_by_sign():
    # x >= 0 cannot produce a negative sum of nonnegative coefficients
    assert solve_nonneg([[1, 2]], [-1]) is None


def test_negative_rhs_feasible():
    A = [[-1, 0], [0, 1]]
    b = [-3, 2]
    x = solve_nonneg(A, b)
    check(A, b, x)
    assert x[0] == 3


def test_zero_rhs():
    x = solve_nonneg([[1, 2], [3, 4]], [0, 0])
    assert x == [0, 0]


def test_redundant_rows():
    A = [[1, 1], [2, 2]]
    b = [1, 2]
    x = solve_nonneg(A, b)
    check(A, b, x)


def test_empty_system():
    assert solve_nonneg([], []) == []


def test_input_validation():
    with pytest.raises(ValueError, match="ragged"):
        solve_nonneg([[1, 2], [1]], [0, 0])
    with pytest.raises(ValueError, match="length mismatch"):
        solve_nonneg([[1, 2]], [0, 0])


def test_random_solvable_systems_exactly():
    rng = random.Random(1234)
    for _ in range(30):
        rows, cols = rng.randint(1, 5), rng.randint(1, 8)
        A = [
            [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
        xstar = [F(rng.randint(0, 5), rng.randint(1, 2)) for _ in range(cols)]
        b = [sum(a * v for a, v in zip(row, xstar)) for row in A]
        x = solve_nonneg(A, b)
        assert x is not None
        check(A, b, x)


def test_solution_is_basic():
    # a basic feasible point has at most as many nonzeros as rows
    A = [[1, 1, 1, 1, 1]]
    b = [3]
    x = solve_nonneg(A, b)
    assert sum(1 for v in x if v != 0) <= 1
    check(A, b, x)
