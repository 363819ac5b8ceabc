"""Exhaustive sweeps over all bases of a prime, with reports and outputs."""

from .checkpoint import Checkpoint, CheckpointError
from .outputs import OUTPUT_FORMATS, emit_outputs
from .report import REPORT_FORMATS, render_report
from .runner import SweepResult, plan_chunks, run_sweep, sweep_chunk
from .selftest import SELFTEST_LEVELS, SelftestFailure, SelftestReport, selftest
from .summary import (
    COMBINED,
    EXTREMAL_STATISTICS,
    ClassSummary,
    ExtremalRecord,
    ExtremalTracker,
    combine,
    model_for_class,
)


def merge(left: ClassSummary, right: ClassSummary) -> ClassSummary:
    """Exact associative merge of two summaries of the same class."""
    return left.merge(right)


__all__ = [
    "Checkpoint",
    "CheckpointError",
    "OUTPUT_FORMATS",
    "emit_outputs",
    "REPORT_FORMATS",
    "render_report",
    "SweepResult",
    "plan_chunks",
    "run_sweep",
    "sweep_chunk",
    "SELFTEST_LEVELS",
    "SelftestFailure",
    "SelftestReport",
    "selftest",
    "COMBINED",
    "EXTREMAL_STATISTICS",
    "ClassSummary",
    "ExtremalRecord",
    "ExtremalTracker",
    "combine",
    "merge",
    "model_for_class",
]
