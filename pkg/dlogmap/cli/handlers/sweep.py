"""Sweep CLI handler."""

import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from ... import reporter
from ...general_config import get_config_value, resolve_workers
from ...sweep import CheckpointError, emit_outputs, render_report, run_sweep

# Configure logger for this module
logger = logging.getLogger(__name__)


def read_primes_file(path: str) -> List[int]:
    """Primes listed one per line; blank lines and # comments are skipped."""
    primes = []
    try:
        with open(path, "r") as f:
            lines = f.readlines()
    except OSError as e:
        raise OSError(f"cannot read primes file {path}: {e}") from e
    for number, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            primes.append(int(text))
        except ValueError:
            raise ValueError(f"{path}:{number}: '{text}' is not an integer") from None
    return primes


def parse_classes(value: Optional[str]) -> Optional[Tuple[int, ...]]:
    """'all' (or nothing) -> None, '1,2' -> (1, 2)."""
    if value is None or value.strip().lower() == "all":
        return None
    try:
        classes = tuple(sorted({int(item) for item in value.split(",") if item.strip()}))
    except ValueError:
        raise ValueError(f"--class expects 'all' or a comma-separated list of integers, got '{value}'") from None
    if not classes or min(classes) < 1:
        raise ValueError(f"--class expects positive m values, got '{value}'")
    return classes


def _checkpoint_for(path: Optional[str], p: int, several: bool) -> Optional[Path]:
    if path is None:
        return None
    path = Path(path)
    if several:
        return path.with_name(f"{path.stem}-{p}{path.suffix}")
    return path


def _sweep_with_progress(p: int, g_range, classes, workers, checkpoint, chunk_size):
    console = Console(stderr=True)
    with Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task(f"Sweeping p={p}", total=None)

        def update(done: int, total: int) -> None:
            progress.update(task, completed=done, total=total)

        return run_sweep(
            p,
            g_range=g_range,
            classes=classes,
            workers=workers,
            checkpoint_path=checkpoint,
            chunk_size=chunk_size,
            progress=update,
        )


def handle_sweep(args) -> int:
    """Handle the sweep command.

    Args:
        args: Parsed command line arguments

    Returns:
        int: Exit code (0 for success, non-zero for error)
    """
    try:
        primes = list(args.prime or [])
        if args.primes_file:
            primes.extend(read_primes_file(args.primes_file))
        if not primes:
            print("Error: give --prime P or --primes-file F", file=sys.stderr)
            return 2
        classes = parse_classes(args.classes)
        workers = resolve_workers(args.workers)
        chunk_size = args.chunk_size or get_config_value("chunk_size")
        out_dir = args.out or get_config_value("out_dir")
        fmt = args.format or get_config_value("format") or "csv"
        report_fmt = args.report or get_config_value("report") or "text"

        results = []
        for p in primes:
            g_range = None
            if args.g_start is not None or args.g_end is not None:
                g_range = (
                    1 if args.g_start is None else args.g_start,
                    p - 1 if args.g_end is None else args.g_end,
                )
            reporter.report_start(f"Sweeping p={p} with {workers} workers")
            result = _sweep_with_progress(
                p,
                g_range,
                classes,
                workers,
                _checkpoint_for(args.checkpoint, p, len(primes) > 1),
                int(chunk_size) if chunk_size else None,
            )
            reporter.report_result(f"p={p}: {result.combined.graph_count} graphs analyzed")
            if result.partial:
                reporter.report_warning(f"p={p}: partial sweep, means cover only the swept bases")
            results.append(result)

        if not args.quiet:
            print(render_report(results, report_fmt))
        if out_dir:
            for path in emit_outputs(results, out_dir, fmt):
                reporter.report_info(f"Wrote {path}")
        return 0
    except CheckpointError as e:
        print(f"Error: {e}", file=sys.stderr)
        print("Remove the checkpoint file or pass matching sweep options to resume.", file=sys.stderr)
        return 1
    except (ValueError, OSError, AssertionError) as e:
        logger.error(f"Sweep failed: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 1
