"""
Statistics of a single functional graph.

``analyze`` measures a transition table in linear time with numpy;
``naive_analyze`` follows the rho path from every node independently and
serves as the reference oracle in tests.

Tables are zero-offset sequences of length n whose entry i holds f(i + 1),
with every value in 1..n. A :class:`~dlogmap.numtheory.TransitionMap` is
accepted directly.
"""

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Union

import numpy as np

from .numtheory import TransitionMap

# Configure logger for this module
logger = logging.getLogger(__name__)

TableLike = Union[TransitionMap, np.ndarray, Sequence[int]]

STAT_FIELDS = (
    "n",
    "components",
    "cyclic_nodes",
    "image_nodes",
    "terminal_nodes",
    "tail_nodes",
    "fixed_points",
    "sum_cycle_over_nodes",
    "sum_tail_over_nodes",
    "max_cycle",
    "max_tail",
)


@dataclass(frozen=True)
class GraphStats:
    """Measured statistics of one functional graph.

    Cycle and tail lengths count edges. ``sum_cycle_over_nodes`` adds, over
    every node, the cycle length of its component; ``sum_tail_over_nodes``
    adds every node's distance to its first cyclic node.
    """

    n: int
    components: int
    cyclic_nodes: int
    image_nodes: int
    terminal_nodes: int
    tail_nodes: int
    fixed_points: int
    sum_cycle_over_nodes: int
    sum_tail_over_nodes: int
    max_cycle: int
    max_tail: int

    @property
    def avg_cycle(self) -> Fraction:
        """Cycle length seen from a uniformly chosen node."""
        return Fraction(self.sum_cycle_over_nodes, self.n)

    @property
    def avg_tail(self) -> Fraction:
        """Tail length seen from a uniformly chosen node."""
        return Fraction(self.sum_tail_over_nodes, self.n)

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


class GraphWorkspace:
    """Scratch buffers reused by :func:`analyze` across graphs of one size."""

    def __init__(self, n: int = 0):
        self.resize(n)

    def resize(self, n: int) -> None:
        self.size = n
        self.remaining = np.empty(n, dtype=np.int64)
        self.label = np.empty(n, dtype=np.int64)
        self.tail = np.empty(n, dtype=np.int64)
        self.root = np.empty(n, dtype=np.int64)

    def ensure(self, n: int) -> "GraphWorkspace":
        if self.size != n:
            logger.debug(f"Resizing graph workspace {self.size} -> {n}")
            self.resize(n)
        return self


def _as_targets(source: TableLike) -> np.ndarray:
    """Validate a table and return zero-based targets."""
    if isinstance(source, TransitionMap):
        source = source.table
    table = np.asarray(source)
    if table.ndim != 1:
        raise ValueError(f"transition table must be one-dimensional, got shape {table.shape}")
    n = table.shape[0]
    if n == 0:
        raise ValueError("transition table is empty")
    if not np.issubdtype(table.dtype, np.integer):
        raise TypeError(f"transition table must hold integers, got {table.dtype}")
    bad = np.flatnonzero((table < 1) | (table > n))
    if bad.size:
        x = int(bad[0]) + 1
        raise ValueError(f"f({x}) = {int(table[bad[0]])} lies outside 1..{n}")
    return table.astype(np.int64) - 1


def analyze(source: TableLike, workspace: Optional[GraphWorkspace] = None) -> GraphStats:
    """Measure every statistic of a functional graph in O(n).

    The passes are: in-degrees, peeling of zero in-degree nodes in layers
    (what survives is cyclic), one walk around each cycle with a visited
    mask to number the cycles, and a reverse sweep over the peeled layers
    that carries tail depth and cycle root from each node's successor.

    Args:
        source: Transition table or TransitionMap
        workspace: Optional reusable scratch buffers

    Returns:
        GraphStats: All measured statistics
    """
    nxt = _as_targets(source)
    n = nxt.shape[0]
    ws = (workspace or GraphWorkspace()).ensure(n)

    indeg = np.bincount(nxt, minlength=n)
    image_nodes = int(np.count_nonzero(indeg))

    # Peel terminal nodes layer by layer
    remaining, label = ws.remaining, ws.label
    np.copyto(remaining, indeg)
    frontier = np.flatnonzero(remaining == 0)
    layers = []
    while frontier.size:
        layers.append(frontier)
        targets = nxt[frontier]
        np.subtract.at(remaining, targets, 1)
        ready = targets[remaining[targets] == 0]
        # keep one copy of each repeated target; label is free scratch here
        slots = np.arange(ready.size)
        label[ready] = slots
        frontier = ready[label[ready] == slots]
    cyclic = np.flatnonzero(remaining > 0)
    cyclic_nodes = int(cyclic.size)
    tail_nodes = sum(int(layer.size) for layer in layers)
    assert cyclic_nodes + tail_nodes == n, "peeling lost nodes"

    # Walk each cycle once, numbering cycles 0..components-1
    succ = nxt.tolist()
    visited = bytearray(n)
    lengths = []
    for start in cyclic.tolist():
        if visited[start]:
            continue
        members = []
        x = start
        while not visited[x]:
            visited[x] = 1
            members.append(x)
            x = succ[x]
        label[members] = len(lengths)
        lengths.append(len(members))
    cycle_len = np.array(lengths, dtype=np.int64)
    components = len(lengths)
    max_cycle = int(cycle_len.max())
    fixed_points = int(np.count_nonzero(nxt[cyclic] == cyclic))

    # Reverse sweep from the cycles outward
    tail, root = ws.tail, ws.root
    tail.fill(0)
    np.copyto(root, label)
    for layer in reversed(layers):
        targets = nxt[layer]
        tail[layer] = tail[targets] + 1
        root[layer] = root[targets]
    sum_tail = int(tail.sum())
    max_tail = int(tail.max())

    comp_size = np.bincount(root, minlength=components)
    sum_cycle = int(np.dot(cycle_len, comp_size))

    return GraphStats(
        n=n,
        components=components,
        cyclic_nodes=cyclic_nodes,
        image_nodes=image_nodes,
        terminal_nodes=n - image_nodes,
        tail_nodes=tail_nodes,
        fixed_points=fixed_points,
        sum_cycle_over_nodes=sum_cycle,
        sum_tail_over_nodes=sum_tail,
        max_cycle=max_cycle,
        max_tail=max_tail,
    )


def naive_analyze(source: TableLike) -> GraphStats:
    """Reference measurement: walk the rho path from every node.

    Quadratic in the worst case and shares nothing between start nodes.
    Only meant for small tables (n up to about 10**4).
    """
    nxt = [int(v) for v in _as_targets(source)]
    n = len(nxt)

    cycles = set()
    cyclic_nodes = 0
    fixed_points = 0
    sum_cycle = sum_tail = 0
    max_cycle = max_tail = 0
    for start in range(n):
        seen: Dict[int, int] = {}
        path = []
        x = start
        while x not in seen:
            seen[x] = len(path)
            path.append(x)
            x = nxt[x]
        tail_len = seen[x]
        cycle_len = len(path) - tail_len
        cycles.add(min(path[tail_len:]))
        if tail_len == 0:
            cyclic_nodes += 1
            if nxt[start] == start:
                fixed_points += 1
        sum_cycle += cycle_len
        sum_tail += tail_len
        max_cycle = max(max_cycle, cycle_len)
        max_tail = max(max_tail, tail_len)

    image_nodes = len(set(nxt))
    return GraphStats(
        n=n,
        components=len(cycles),
        cyclic_nodes=cyclic_nodes,
        image_nodes=image_nodes,
        terminal_nodes=n - image_nodes,
        tail_nodes=n - cyclic_nodes,
        fixed_points=fixed_points,
        sum_cycle_over_nodes=sum_cycle,
        sum_tail_over_nodes=sum_tail,
        max_cycle=max_cycle,
        max_tail=max_tail,
    )
