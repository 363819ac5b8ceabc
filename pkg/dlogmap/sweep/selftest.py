"""
Built-in self-test: the oracle suites, optionally followed by a small sweep.

``quick`` cross-checks the graph engine against the naive rho walker, the
exact series against brute-force enumeration and the constants against
their known values. ``full`` additionally sweeps p = 2027 and compares the
class means to the asymptotic predictions.
"""

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, List, Optional

from .. import reporter
from ..asymptotics import (
    BINARY_MAX_TAIL_OFFSET,
    MAX_TAIL_COEFFICIENT,
    golomb_dickman,
    harmonic_number,
    max_cycle_coefficient,
    predict_binary,
)
from ..graph_engine import GraphWorkspace, analyze, naive_analyze
from ..numtheory import build_map, classify_m, count_m_ary, prime_context
from ..series import binary_graph_count, exact_mean, exact_mean_max_tail, exhaustive_enumerate
from .runner import run_sweep

# Configure logger for this module
logger = logging.getLogger(__name__)

SELFTEST_LEVELS = ("quick", "full")

SELFTEST_PRIME = 2027
# Relative tolerance for class means against predictions at p = 2027
SWEEP_TOLERANCE = 0.10

RANDOM_TABLES = 200
RANDOM_SEED = 20231


class SelftestFailure(AssertionError):
    """A self-test check failed on a specific input."""

    def __init__(self, message: str, offending_input: Any = None):
        super().__init__(message)
        self.offending_input = offending_input


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SelftestReport:
    level: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def _expect(condition: bool, message: str, offending_input: Any = None) -> None:
    if not condition:
        raise SelftestFailure(message, offending_input)


def check_engine_random_tables() -> str:
    rng = random.Random(RANDOM_SEED)
    workspace = GraphWorkspace()
    for _ in range(RANDOM_TABLES):
        n = rng.randint(1, 200)
        table = [rng.randint(1, n) for _ in range(n)]
        fast, slow = analyze(table, workspace), naive_analyze(table)
        _expect(fast == slow, f"analyze and naive_analyze disagree: {fast} != {slow}", table)
    return f"{RANDOM_TABLES} random tables"


def check_engine_image_nodes() -> str:
    ctx = prime_context(211)
    workspace = GraphWorkspace()
    for g in range(1, ctx.p):
        tmap = build_map(g, ctx)
        stats = analyze(tmap, workspace)
        m = classify_m(g, ctx)
        _expect(stats.image_nodes * m == ctx.n, f"p=211, g={g}: {stats.image_nodes} image nodes, m={m}", g)
        if g % 15 == 0:
            _expect(stats == naive_analyze(tmap), f"p=211, g={g}: engines disagree", g)
    return "p=211, every g"


def check_series_counts() -> str:
    for n in (2, 4, 6):
        table = exhaustive_enumerate(n, 2)
        expected = binary_graph_count(n)
        _expect(table.count == expected, f"n={n}: {table.count} enumerated, series says {expected}", n)
    _expect(binary_graph_count(4) == 36, "binary_graph_count(4) != 36", 4)
    return "binary counts n=2,4,6"


def check_series_means() -> str:
    for n in (2, 4, 6):
        table = exhaustive_enumerate(n, 2)
        for statistic in ("components", "cyclic_nodes", "terminal_nodes"):
            series_value = exact_mean(statistic, n)
            _expect(
                series_value == table.means[statistic],
                f"n={n}, {statistic}: series {series_value} != enumerated {table.means[statistic]}",
                (statistic, n),
            )
        max_tail = exact_mean_max_tail(n)
        _expect(
            max_tail == table.means["max_tail"],
            f"n={n}, max_tail: series {max_tail} != enumerated {table.means['max_tail']}",
            ("max_tail", n),
        )
    return "binary means n=2,4,6"


def check_permutation_means() -> str:
    for n in range(1, 7):
        table = exhaustive_enumerate(n, 1)
        harmonic = sum(Fraction(1, k) for k in range(1, n + 1))
        _expect(table.count == math.factorial(n), f"n={n}: {table.count} permutations", n)
        _expect(table.means["components"] == harmonic, f"n={n}: mean components {table.means['components']}", n)
        _expect(table.means["avg_cycle"] == Fraction(n + 1, 2), f"n={n}: mean avg cycle {table.means['avg_cycle']}", n)
    return "permutations n=1..6"


def check_constants() -> str:
    constants = (
        ("golomb_dickman", golomb_dickman(1e-7), 0.62432965, 1e-7),
        ("max_cycle_coefficient", max_cycle_coefficient(), 0.78248, 5e-5),
        ("max_tail_coefficient", MAX_TAIL_COEFFICIENT, 1.73746, 5e-5),
        ("binary_max_tail_offset", BINARY_MAX_TAIL_OFFSET, -1.61371, 5e-5),
    )
    for name, value, expected, tolerance in constants:
        _expect(abs(value - expected) <= tolerance, f"{name} = {value}, expected {expected} +/- {tolerance}", name)
    return "4 constants"


def check_sweep(workers: int = 1) -> str:
    p = SELFTEST_PRIME
    ctx = prime_context(p)
    result = run_sweep(p, workers=workers)
    for m, summary in result.per_class.items():
        _expect(summary.graph_count == count_m_ary(ctx, m), f"p={p}, m={m}: {summary.graph_count} graphs", m)
    _expect(result.combined.graph_count == p - 1, f"p={p}: {result.combined.graph_count} graphs in total", p)

    permutation = result.per_class[1].means()
    harmonic = harmonic_number(p - 1)
    _expect(
        abs(float(permutation["components"]) - harmonic) <= SWEEP_TOLERANCE * harmonic,
        f"p={p}, permutations: mean components {float(permutation['components']):.3f} vs {harmonic:.3f}",
        ("permutation", "components"),
    )

    binary = result.per_class[2].means()
    predicted = predict_binary(p - 1)
    for name in ("components", "cyclic_nodes", "avg_cycle", "avg_tail"):
        observed, expected = float(binary[name]), predicted.get(name)
        _expect(
            abs(observed - expected) <= SWEEP_TOLERANCE * expected,
            f"p={p}, binary: mean {name} {observed:.3f} vs predicted {expected:.3f}",
            ("binary", name),
        )
    _expect(binary["image_nodes"] == Fraction(p - 1, 2), f"p={p}, binary: image nodes {binary['image_nodes']}", p)
    return f"p={p} sweep"


QUICK_CHECKS: List[Callable[[], str]] = [
    check_engine_random_tables,
    check_engine_image_nodes,
    check_series_counts,
    check_series_means,
    check_permutation_means,
    check_constants,
]


def _run_check(name: str, check: Callable[[], str]) -> CheckResult:
    reporter.report_start(name, end=" ")
    try:
        detail = check()
    except SelftestFailure as e:
        reporter.report_error(f"{e} (input: {e.offending_input!r})")
        logger.error(f"Self-test {name} failed: {e}")
        return CheckResult(name, False, str(e))
    reporter.report_result(detail)
    return CheckResult(name, True, detail)


def selftest(level: str = "quick", workers: Optional[int] = None) -> SelftestReport:
    """Run the self-test suites and report each check.

    Args:
        level: "quick" (oracles and constants) or "full" (adds the p=2027 sweep)
        workers: Worker processes for the full-level sweep

    Returns:
        SelftestReport; ``passed`` is False if any check failed
    """
    if level not in SELFTEST_LEVELS:
        raise ValueError(f"unknown self-test level '{level}', expected one of {', '.join(SELFTEST_LEVELS)}")
    report = SelftestReport(level=level)
    for check in QUICK_CHECKS:
        report.checks.append(_run_check(check.__name__[len("check_"):], check))
    if level == "full":
        report.checks.append(_run_check("sweep", lambda: check_sweep(workers or 1)))
    logger.info(f"Self-test {level}: {len(report.failures)} of {len(report.checks)} checks failed")
    return report
