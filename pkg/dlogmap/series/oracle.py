"""
Exact finite-n means for random binary functional graphs.

Every function here works on exponential generating functions truncated at
the requested size, with rational coefficients throughout:

    b = z + z b^2 / 2           binary trees
    f = 1 / (1 - z b)           binary functional graphs
    c = log f                   components

plus the bounded-height trees b^[h] used for the maximum tail length and
the general m-ary tree, component and graph series.
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Dict, Tuple

from .power_series import PowerSeries, one, z

# Configure logger for this module
logger = logging.getLogger(__name__)

MEAN_STATISTICS = ("components", "cyclic_nodes", "terminal_nodes")


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"binary functional graphs need an even size >= 2, got {n}")


def solve_binary_tree_series(order: int) -> PowerSeries:
    """Coefficients of b(z) = z + z b(z)^2 / 2 through z^order.

    b_1 = 1 and b_n = (1/2) sum_{i+j=n-1} b_i b_j, so only odd powers
    appear and n! b_n counts labelled binary trees on n nodes.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    b = [Fraction(0)] * (order + 1)
    b[1] = Fraction(1)
    for n in range(2, order + 1):
        acc = Fraction(0)
        for i in range(1, n - 1):
            if b[i] and b[n - 1 - i]:
                acc += b[i] * b[n - 1 - i]
        b[n] = acc / 2
    return PowerSeries(b, order)


def binary_graph_series(order: int) -> PowerSeries:
    """f(z) = 1 / (1 - z b(z)) through z^order."""
    order = max(order, 1)
    b = solve_binary_tree_series(order)
    return (one(order) - b.shift(1)).reciprocal()


def binary_graph_count(n: int) -> int:
    """Number of functions on n labelled nodes with every in-degree 0 or 2."""
    if n < 0:
        raise ValueError(f"size must be >= 0, got {n}")
    return binary_graph_series(n).egf_count(n)


def mean_series(statistic: str, order: int) -> PowerSeries:
    """Mean-value generating function for one additive statistic.

    components:     f log f
    cyclic_nodes:   z b f^2
    terminal_nodes: z^2 (1 - 2 z^2)^(-3/2)
    """
    if statistic == "components":
        f = binary_graph_series(order)
        return f * f.log()
    if statistic == "cyclic_nodes":
        zb = solve_binary_tree_series(order).shift(1)
        f = (one(order) - zb).reciprocal()
        return zb * f * f
    if statistic == "terminal_nodes":
        base = one(order) - PowerSeries.monomial(2, order, 2)
        return base.power(Fraction(-3, 2)).shift(2)
    raise ValueError(f"unknown statistic '{statistic}', expected one of {', '.join(MEAN_STATISTICS)}")


def exact_mean(statistic: str, n: int) -> Fraction:
    """Exact expectation of ``statistic`` over all binary graphs of size n."""
    _require_even(n)
    xi = mean_series(statistic, n)
    f = binary_graph_series(n)
    value = xi[n] / f[n]
    logger.debug(f"exact_mean({statistic}, {n}) = {value}")
    return value


def bounded_height_tree_series(h: int, order: int) -> PowerSeries:
    """b^[h]: b^[0] = z, b^[h+1] = z + z (b^[h])^2 / 2."""
    if h < 0:
        raise ValueError(f"height must be >= 0, got {h}")
    zed = z(order)
    bh = zed
    for _ in range(h):
        bh = zed + (zed * bh * bh) / 2
    return bh


def tail_excess_series(h: int, order: int) -> PowerSeries:
    """e_h = (b - b^[h]) / (2 b), exact through z^(order - 1)."""
    b = solve_binary_tree_series(order)
    bh = bounded_height_tree_series(h, order)
    return (b - bh).unshift(1) / (b.unshift(1) * 2)


def max_tail_excess_sum(n: int) -> Fraction:
    """sum_{h >= 0} ([z^n] f - [z^n] f^[h]) / [z^n] f with f^[h] = 1/(1 - z b^[h]).

    A tree of height 0 already hangs at tail length 1, so f^[h] counts the
    graphs whose longest tail is at most h + 1 and this sum equals
    E[max tail] - 1.
    """
    _require_even(n)
    b = solve_binary_tree_series(n)
    f = (one(n) - b.shift(1)).reciprocal()
    zed = z(n)
    total = Fraction(0)
    bh = zed
    h = 0
    # b^[h] agrees with b through z^(n-1) once every tree of size < n fits
    while bh.coefficients[:n] != b.coefficients[:n]:
        fh = (one(n) - bh.shift(1)).reciprocal()
        total += f[n] - fh[n]
        bh = zed + (zed * bh * bh) / 2
        h += 1
    logger.debug(f"max_tail_excess_sum({n}): {h} heights summed")
    return total / f[n]


def exact_mean_max_tail(n: int) -> Fraction:
    """Exact expected maximum tail length over binary graphs of size n.

    Every binary graph on n >= 2 nodes has a terminal node, hence a tail of
    length at least 1; the height sum supplies the rest.
    """
    return 1 + max_tail_excess_sum(n)


def graphs_with_max_tail_above(k: int, n: int) -> int:
    """Number of binary graphs of size n whose longest tail exceeds k >= 1."""
    _require_even(n)
    if k < 1:
        return binary_graph_count(n)
    f = binary_graph_series(n)
    bh = bounded_height_tree_series(k - 1, n)
    fh = (one(n) - bh.shift(1)).reciprocal()
    return (f - fh).egf_count(n)


def mary_series(m: int, order: int) -> Tuple[PowerSeries, PowerSeries, PowerSeries]:
    """Tree, component and graph series for m-ary functional graphs.

    t = z + z t^m / m!, c = log 1/(1 - z t^(m-1) / (m-1)!), f = exp(c).

    Returns:
        (t, c, f), each exact through z^order
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    zed = z(order)
    t = zed
    # each pass fixes at least one more coefficient
    for _ in range(order):
        t = zed + (zed * t**m) / factorial(m)
    u = (zed * t ** (m - 1)) / factorial(m - 1)
    c = (one(order) - u).reciprocal().log()
    f = c.exp()
    return t, c, f


def mary_graph_count(m: int, n: int) -> int:
    """Number of functions on n labelled nodes with every in-degree 0 or m."""
    if n == 0:
        return 1
    _, _, f = mary_series(m, n)
    return f.egf_count(n)


def exact_means(n: int) -> Dict[str, Fraction]:
    """All exact binary means available from the series at size n."""
    means = {statistic: exact_mean(statistic, n) for statistic in MEAN_STATISTICS}
    means["max_tail"] = exact_mean_max_tail(n)
    return means
