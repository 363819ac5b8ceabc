"""Exact generating-function and brute-force oracles."""

from .power_series import PowerSeries
from .oracle import (
    MEAN_STATISTICS,
    binary_graph_count,
    binary_graph_series,
    bounded_height_tree_series,
    exact_mean,
    exact_mean_max_tail,
    exact_means,
    graphs_with_max_tail_above,
    mary_graph_count,
    mary_series,
    max_tail_excess_sum,
    solve_binary_tree_series,
    tail_excess_series,
)
from .exhaustive import ExhaustiveTable, exhaustive_enumerate, m_ary_functions

__all__ = [
    "PowerSeries",
    "MEAN_STATISTICS",
    "binary_graph_count",
    "binary_graph_series",
    "bounded_height_tree_series",
    "exact_mean",
    "exact_mean_max_tail",
    "exact_means",
    "graphs_with_max_tail_above",
    "mary_graph_count",
    "mary_series",
    "max_tail_excess_sum",
    "solve_binary_tree_series",
    "tail_excess_series",
    "ExhaustiveTable",
    "exhaustive_enumerate",
    "m_ary_functions",
]
