"""
Tests for the exact series oracle and the brute-force enumerator.
"""

import math
from fractions import Fraction
from functools import lru_cache

import pytest

from dlogmap.asymptotics import EULER_GAMMA
from dlogmap.series import (
    PowerSeries,
    binary_graph_count,
    binary_graph_series,
    bounded_height_tree_series,
    exact_mean,
    exact_mean_max_tail,
    exact_means,
    exhaustive_enumerate,
    graphs_with_max_tail_above,
    m_ary_functions,
    mary_graph_count,
    mary_series,
    max_tail_excess_sum,
    solve_binary_tree_series,
    tail_excess_series,
)
from dlogmap.series.power_series import one, z


@lru_cache(maxsize=None)
def binary_table(n):
    return exhaustive_enumerate(n, 2)


def harmonic(n):
    return sum(Fraction(1, k) for k in range(1, n + 1))


# PowerSeries


def test_power_series_basics():
    geometric = (one(6) - z(6)).reciprocal()
    assert geometric.coefficients == tuple(Fraction(1) for _ in range(7))
    assert geometric.egf_count(5) == 120
    assert (z(4) * 3)[1] == 3
    assert len(z(4)) == 5
    with pytest.raises(IndexError):
        z(4)[5]


def test_power_series_exp_log():
    f = binary_graph_series(12)
    assert f.log().exp() == f
    assert (f.sqrt() * f.sqrt()) == f


def test_power_series_rational_power():
    base = one(6) - PowerSeries.monomial(2, 6, 2)
    series = base.power(Fraction(-3, 2))
    assert series[0] == 1 and series[2] == 3 and series[4] == Fraction(15, 2)
    assert series[1] == 0 and series[3] == 0


def test_power_series_preconditions():
    with pytest.raises(ValueError):
        z(4).log()
    with pytest.raises(ValueError):
        one(4).exp()
    with pytest.raises(ZeroDivisionError):
        z(4).reciprocal()
    with pytest.raises(ValueError):
        one(4).unshift(1)


# Counts


def test_binary_tree_counts():
    b = solve_binary_tree_series(9)
    assert b.egf_count(1) == 1
    assert b.egf_count(2) == 0
    assert b.egf_count(3) == 3
    assert solve_binary_tree_series(31).odd_part_only()


def test_binary_graph_counts():
    assert binary_graph_count(0) == 1
    assert binary_graph_count(2) == 2
    assert binary_graph_count(4) == 36
    assert binary_graph_count(6) == 1800
    assert binary_graph_count(8) == 176400
    for n in range(1, 30, 2):
        assert binary_graph_count(n) == 0, f"n={n}"


def test_binary_graph_series_closed_form():
    order = 24
    closed = (one(order) - PowerSeries.monomial(2, order, 2)).power(Fraction(-1, 2))
    assert binary_graph_series(order) == closed
    assert binary_graph_series(order).even_part_only()


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_binary_counts_match_enumeration(n):
    assert binary_table(n).count == binary_graph_count(n)


def test_enumerated_functions_are_binary():
    functions = list(m_ary_functions(4, 2))
    assert len(functions) == 36 == len(set(functions))
    for table in functions:
        indegree = [table.count(x) for x in range(1, 5)]
        assert all(d in (0, 2) for d in indegree), table


def test_mary_series():
    order = 16
    t, _, f = mary_series(2, order)
    assert t == solve_binary_tree_series(order)
    assert f == binary_graph_series(order)
    for n in range(0, 8):
        assert mary_graph_count(1, n) == math.factorial(n)
    assert mary_graph_count(3, 6) == exhaustive_enumerate(6, 3).count == 300
    assert mary_graph_count(3, 4) == 0


# Means


def test_exact_mean_examples():
    assert exact_mean("components", 4) == Fraction(4, 3)
    assert exact_mean("cyclic_nodes", 4) == Fraction(5, 3)
    for n in (2, 4, 6, 8, 20):
        assert exact_mean("terminal_nodes", n) == Fraction(n, 2)
    with pytest.raises(ValueError):
        exact_mean("components", 5)
    with pytest.raises(ValueError):
        exact_mean("fixed_points", 4)


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_exact_means_match_enumeration(n):
    table = binary_table(n)
    for statistic, value in exact_means(n).items():
        assert value == table.means[statistic], f"n={n}, {statistic}: {value} != {table.means[statistic]}"


def test_max_tail_calibration():
    assert exact_mean_max_tail(2) == 1
    assert max_tail_excess_sum(2) == 0
    assert exact_mean_max_tail(4) == Fraction(4, 3)
    assert graphs_with_max_tail_above(1, 4) == 12
    assert binary_table(4).distribution["max_tail"] == {1: 24, 2: 12}


@pytest.mark.parametrize("n", [4, 6, 8])
def test_max_tail_tail_counts_match_enumeration(n):
    histogram = binary_table(n).distribution["max_tail"]
    for k in range(1, n):
        above = sum(count for value, count in histogram.items() if value > k)
        assert graphs_with_max_tail_above(k, n) == above, f"n={n}, k={k}"


def test_permutation_means_by_enumeration():
    table = exhaustive_enumerate(3, 1)
    assert table.count == 6
    assert table.means["components"] == Fraction(11, 6)
    for n in range(1, 9):
        table = exhaustive_enumerate(n, 1)
        assert table.count == math.factorial(n)
        assert table.means["components"] == harmonic(n), f"n={n}"
        assert table.means["avg_cycle"] == Fraction(n + 1, 2), f"n={n}"
        assert table.means["max_tail"] == 0


def test_exhaustive_limits():
    assert exhaustive_enumerate(3, 2).count == 0
    with pytest.raises(ValueError):
        exhaustive_enumerate(9, 2)
    with pytest.raises(ValueError):
        exhaustive_enumerate(4, 0)


# Bounded heights


def test_bounded_height_trees():
    order = 15
    b = solve_binary_tree_series(order)
    assert bounded_height_tree_series(0, order) == z(order)
    # height h trees have at most 2^(h+1) - 1 nodes
    b2 = bounded_height_tree_series(2, order)
    assert b2[7] != 0 and b2[9] == 0
    assert bounded_height_tree_series(order, order) == b


@pytest.mark.parametrize("h", [0, 1, 2, 5])
def test_tree_height_identity(h):
    order = 20
    b = solve_binary_tree_series(order)
    bh = bounded_height_tree_series(h, order)
    bh_next = bounded_height_tree_series(h + 1, order)
    assert b - bh_next == z(order) * (b - bh) * (b + bh) / 2


@pytest.mark.parametrize("h", [0, 1, 3])
def test_tail_excess_recursion(h):
    order = 20
    e_h = tail_excess_series(h, order)
    e_next = tail_excess_series(h + 1, order)
    zb = one(order) - (one(order) - PowerSeries.monomial(2, order, 2)).sqrt()
    assert e_next == zb * e_h * (1 - e_h)


# Convergence


def test_components_converge_to_asymptotic():
    gaps = [
        abs(float(exact_mean("components", n)) - (math.log(2 * n) + EULER_GAMMA) / 2)
        for n in (50, 100, 200)
    ]
    assert gaps[0] > gaps[1] > gaps[2], gaps
