"""
Brute-force oracle: every m-ary functional graph on a handful of nodes.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from ..graph_engine import STAT_FIELDS, GraphWorkspace, analyze

# Configure logger for this module
logger = logging.getLogger(__name__)

MAX_EXHAUSTIVE_SIZE = 8


@dataclass
class ExhaustiveTable:
    """Exact averages of every statistic over all m-ary graphs of size n."""

    n: int
    m: int
    count: int
    means: Dict[str, Fraction] = field(default_factory=dict)
    distribution: Dict[str, Dict[int, int]] = field(default_factory=dict)


def _block_partitions(items: Tuple[int, ...], m: int) -> Iterator[List[Tuple[int, ...]]]:
    """Partitions of ``items`` into unordered blocks of exactly m elements."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for mates in itertools.combinations(rest, m - 1):
        block = (head,) + mates
        left = tuple(x for x in rest if x not in mates)
        for tail in _block_partitions(left, m):
            yield [block] + tail


def m_ary_functions(n: int, m: int) -> Iterator[Tuple[int, ...]]:
    """Yield every table on {1..n} whose in-degrees are all 0 or m.

    Each function is a partition of the nodes into preimage blocks of size m
    together with an injective choice of image node per block.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n % m:
        return
    nodes = tuple(range(n))
    for blocks in _block_partitions(nodes, m):
        for images in itertools.permutations(nodes, len(blocks)):
            table = [0] * n
            for block, target in zip(blocks, images):
                for x in block:
                    table[x] = target + 1
            yield tuple(table)


def exhaustive_enumerate(n: int, m: int) -> ExhaustiveTable:
    """Analyze every m-ary graph of size n and average the statistics.

    Args:
        n: Number of nodes, 1..8
        m: In-degree of image nodes

    Returns:
        ExhaustiveTable with exact means of each GraphStats field plus
        ``avg_cycle`` and ``avg_tail``, and the distribution of max_tail
        and max_cycle
    """
    if not 1 <= n <= MAX_EXHAUSTIVE_SIZE:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_SIZE}, got {n}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")

    totals = {name: 0 for name in STAT_FIELDS}
    distribution: Dict[str, Dict[int, int]] = {"max_tail": {}, "max_cycle": {}}
    workspace = GraphWorkspace(n)
    count = 0
    for table in m_ary_functions(n, m):
        stats = analyze(table, workspace)
        count += 1
        for name in STAT_FIELDS:
            totals[name] += getattr(stats, name)
        for name, hist in distribution.items():
            value = getattr(stats, name)
            hist[value] = hist.get(value, 0) + 1

    logger.debug(f"exhaustive_enumerate(n={n}, m={m}): {count} graphs")
    result = ExhaustiveTable(n=n, m=m, count=count, distribution=distribution)
    if count:
        result.means = {name: Fraction(totals[name], count) for name in STAT_FIELDS}
        result.means["avg_cycle"] = Fraction(totals["sum_cycle_over_nodes"], count * n)
        result.means["avg_tail"] = Fraction(totals["sum_tail_over_nodes"], count * n)
    return result
