"""
Aggregates of graph statistics over the bases g of one m-class.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Tuple

from ..asymptotics import Prediction, predict_binary, predict_permutation, predict_random
from ..graph_engine import STAT_FIELDS, GraphStats

# Configure logger for this module
logger = logging.getLogger(__name__)

# m value of the summary taken over every swept g
COMBINED = 0

SUM_FIELDS = tuple(name for name in STAT_FIELDS if name != "n")

# Reported means, in table order
MEAN_FIELDS = (
    "components",
    "cyclic_nodes",
    "tail_nodes",
    "image_nodes",
    "terminal_nodes",
    "avg_cycle",
    "avg_tail",
    "max_cycle",
    "max_tail",
    "fixed_points",
)

LONGEST_CYCLE = "longest_cycle"
LONGEST_TAIL = "longest_tail"
MAX_CYCLE_EQUALS_ONE = "max_cycle_equals_one"
EXTREMAL_STATISTICS = (LONGEST_CYCLE, LONGEST_TAIL, MAX_CYCLE_EQUALS_ONE)


def model_for_class(m: int) -> Optional[str]:
    """Random model the class is compared against, if any."""
    return {COMBINED: "random", 1: "permutation", 2: "binary"}.get(m)


@dataclass
class ClassSummary:
    """Exact running totals of GraphStats over the graphs of one class.

    ``m == 0`` denotes the combined summary over every swept base.
    """

    p: int
    m: int
    graph_count: int = 0
    sums: Dict[str, int] = field(default_factory=lambda: {name: 0 for name in SUM_FIELDS})

    @property
    def n(self) -> int:
        return self.p - 1

    @property
    def model(self) -> Optional[str]:
        return model_for_class(self.m)

    def add(self, stats: GraphStats) -> None:
        if stats.n != self.n:
            raise ValueError(f"graph of size {stats.n} does not belong to p={self.p}")
        self.graph_count += 1
        for name in SUM_FIELDS:
            self.sums[name] += getattr(stats, name)

    def merge(self, other: "ClassSummary", m: Optional[int] = None) -> "ClassSummary":
        """Exact sum of two summaries of the same prime.

        ``m`` relabels the result, e.g. COMBINED when folding classes together.
        """
        if other.p != self.p:
            raise ValueError(f"cannot merge summaries of p={self.p} and p={other.p}")
        target = self.m if m is None else m
        if m is None and other.m != self.m:
            raise ValueError(f"cannot merge classes m={self.m} and m={other.m} without relabelling")
        return ClassSummary(
            p=self.p,
            m=target,
            graph_count=self.graph_count + other.graph_count,
            sums={name: self.sums[name] + other.sums[name] for name in SUM_FIELDS},
        )

    def means(self) -> Dict[str, Fraction]:
        """Per-graph means; per-node averages are further divided by n."""
        if not self.graph_count:
            return {}
        count = self.graph_count
        means = {
            name: Fraction(self.sums[name], count)
            for name in MEAN_FIELDS
            if name in self.sums
        }
        means["avg_cycle"] = Fraction(self.sums["sum_cycle_over_nodes"], count * self.n)
        means["avg_tail"] = Fraction(self.sums["sum_tail_over_nodes"], count * self.n)
        return {name: means[name] for name in MEAN_FIELDS}

    def predicted(self) -> Optional[Prediction]:
        model = self.model
        if model == "random":
            return predict_random(self.n)
        if model == "permutation":
            return predict_permutation(self.n)
        if model == "binary":
            return predict_binary(self.n)
        return None

    def pct_error(self) -> Dict[str, Optional[float]]:
        """|observed - predicted| / predicted * 100 for every predicted mean."""
        prediction = self.predicted()
        means = self.means()
        errors: Dict[str, Optional[float]] = {}
        for name in MEAN_FIELDS:
            expected = prediction.get(name) if prediction and hasattr(prediction, name) else None
            observed = means.get(name)
            if expected is None or observed is None:
                errors[name] = None
            elif expected == 0:
                errors[name] = 0.0 if observed == 0 else None
            else:
                errors[name] = abs(float(observed) - expected) / expected * 100
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "m": self.m, "graph_count": self.graph_count, "sums": dict(self.sums)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassSummary":
        sums = {name: int(data["sums"][name]) for name in SUM_FIELDS}
        return cls(p=int(data["p"]), m=int(data["m"]), graph_count=int(data["graph_count"]), sums=sums)


def combine(summaries: Iterable[ClassSummary], p: int) -> ClassSummary:
    """Fold per-class summaries into the COMBINED summary."""
    combined = ClassSummary(p=p, m=COMBINED)
    for summary in summaries:
        combined = combined.merge(summary, m=COMBINED)
    return combined


@dataclass
class ExtremalRecord:
    """Extreme value of a statistic over a sweep with every base attaining it.

    For ``max_cycle_equals_one`` the value is the number of bases whose graph
    has no cycle longer than one, and ``witnesses`` lists all of them.
    """

    p: int
    statistic: str
    value: int
    witnesses: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "statistic": self.statistic, "value": self.value, "witnesses": list(self.witnesses)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExtremalRecord":
        return cls(
            p=int(data["p"]),
            statistic=str(data["statistic"]),
            value=int(data["value"]),
            witnesses=[int(g) for g in data["witnesses"]],
        )


class ExtremalTracker:
    """Collects longest cycle, longest tail and fixed-point-only graphs."""

    def __init__(self, p: int):
        self.p = p
        self.longest: Dict[str, Tuple[int, List[int]]] = {
            LONGEST_CYCLE: (-1, []),
            LONGEST_TAIL: (-1, []),
        }
        self.fixed_point_only: List[int] = []

    def _offer(self, statistic: str, value: int, witnesses: List[int]) -> None:
        best, current = self.longest[statistic]
        if value > best:
            self.longest[statistic] = (value, list(witnesses))
        elif value == best:
            current.extend(witnesses)

    def observe(self, g: int, stats: GraphStats) -> None:
        self._offer(LONGEST_CYCLE, stats.max_cycle, [g])
        self._offer(LONGEST_TAIL, stats.max_tail, [g])
        if stats.max_cycle == 1:
            self.fixed_point_only.append(g)

    def merge(self, other: "ExtremalTracker") -> None:
        for statistic, (value, witnesses) in other.longest.items():
            if value >= 0:
                self._offer(statistic, value, witnesses)
        self.fixed_point_only.extend(other.fixed_point_only)

    def records(self) -> List[ExtremalRecord]:
        records = []
        for statistic in (LONGEST_CYCLE, LONGEST_TAIL):
            value, witnesses = self.longest[statistic]
            if value >= 0:
                records.append(ExtremalRecord(self.p, statistic, value, sorted(set(witnesses))))
        ones = sorted(set(self.fixed_point_only))
        records.append(ExtremalRecord(self.p, MAX_CYCLE_EQUALS_ONE, len(ones), ones))
        return records

    def to_dict(self) -> Dict[str, Any]:
        return {
            "longest": {k: [v, sorted(w)] for k, (v, w) in self.longest.items()},
            "fixed_point_only": sorted(self.fixed_point_only),
        }

    @classmethod
    def from_dict(cls, p: int, data: Dict[str, Any]) -> "ExtremalTracker":
        tracker = cls(p)
        for statistic in (LONGEST_CYCLE, LONGEST_TAIL):
            value, witnesses = data["longest"][statistic]
            tracker.longest[statistic] = (int(value), [int(g) for g in witnesses])
        tracker.fixed_point_only = [int(g) for g in data["fixed_point_only"]]
        return tracker
