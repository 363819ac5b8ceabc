"""Self-test CLI handler."""

import sys

from ... import reporter
from ...general_config import resolve_workers
from ...sweep import selftest


def handle_selftest(args) -> int:
    """Run the self-test and return 0 only if every check passed."""
    try:
        workers = resolve_workers(args.workers) if args.level == "full" else 1
        report = selftest(args.level, workers=workers)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    if report.passed:
        reporter.report_result(f"Self-test ({report.level}): all {len(report.checks)} checks passed")
        return 0
    for failure in report.failures:
        print(f"Error: {failure.name}: {failure.detail}", file=sys.stderr)
    return 1
