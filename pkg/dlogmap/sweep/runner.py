"""
Exhaustive sweep over every base g for one prime.

The range of g is cut into contiguous chunks. Each chunk is classified,
mapped and analyzed independently (in worker processes when workers > 1)
and the exact chunk totals are merged in chunk order, so the result does
not depend on the worker count.
"""

import logging
import math
import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Tuple, Union

from ..graph_engine import GraphWorkspace, analyze
from ..numtheory import PrimeContext, build_map, classify_m
from .checkpoint import Checkpoint, CheckpointError
from .summary import ClassSummary, ExtremalRecord, ExtremalTracker, combine

# Configure logger for this module
logger = logging.getLogger(__name__)

ProgressCallback = Callable[[int, int], None]


class SweepResult(NamedTuple):
    """Per-class summaries, the combined summary and the extremal records."""

    per_class: Dict[int, ClassSummary]
    combined: ClassSummary
    records: List[ExtremalRecord]
    partial: bool = False
    # m values kept by a class filter, None when every class was swept
    classes: Optional[Tuple[int, ...]] = None


@dataclass
class ChunkResult:
    """Exact totals for the bases start..end of one chunk."""

    start: int
    end: int
    summaries: Dict[int, ClassSummary]
    extremes: ExtremalTracker

    def to_dict(self) -> Dict[str, Any]:
        return {
            "start": self.start,
            "end": self.end,
            "summaries": [self.summaries[m].to_dict() for m in sorted(self.summaries)],
            "extremes": self.extremes.to_dict(),
        }

    @classmethod
    def from_dict(cls, p: int, data: Dict[str, Any]) -> "ChunkResult":
        summaries = [ClassSummary.from_dict(item) for item in data["summaries"]]
        return cls(
            start=int(data["start"]),
            end=int(data["end"]),
            summaries={s.m: s for s in summaries},
            extremes=ExtremalTracker.from_dict(p, data["extremes"]),
        )


@lru_cache(maxsize=8)
def _context(p: int) -> PrimeContext:
    return PrimeContext.create(p)


_workspace = GraphWorkspace()


def sweep_chunk(p: int, start: int, end: int, classes: Optional[Tuple[int, ...]] = None) -> ChunkResult:
    """Analyze the graphs of every base g in start..end (inclusive).

    Args:
        p: Prime modulus
        start: First base
        end: Last base
        classes: m values to keep, or None for all

    Returns:
        ChunkResult with one summary per class met in the chunk
    """
    ctx = _context(p)
    n = ctx.n
    summaries: Dict[int, ClassSummary] = {}
    extremes = ExtremalTracker(p)
    for g in range(start, end + 1):
        m = classify_m(g, ctx)
        if classes is not None and m not in classes:
            continue
        stats = analyze(build_map(g, ctx), _workspace)
        if stats.image_nodes * m != n:
            raise AssertionError(
                f"p={p}, g={g}: {stats.image_nodes} image nodes in an {m}-ary graph, expected {n // m}"
            )
        summary = summaries.get(m)
        if summary is None:
            summary = summaries[m] = ClassSummary(p=p, m=m)
        summary.add(stats)
        extremes.observe(g, stats)
    return ChunkResult(start=start, end=end, summaries=summaries, extremes=extremes)


def _sweep_chunk_task(task: Tuple[int, int, int, Optional[Tuple[int, ...]]]) -> Dict[str, Any]:
    return sweep_chunk(*task).to_dict()


def plan_chunks(g_start: int, g_end: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Contiguous (start, end) pairs covering g_start..g_end."""
    if chunk_size < 1:
        raise ValueError(f"chunk size must be >= 1, got {chunk_size}")
    return [
        (lo, min(lo + chunk_size - 1, g_end))
        for lo in range(g_start, g_end + 1, chunk_size)
    ]


def default_chunk_size(total: int) -> int:
    # chunk_size is part of the checkpoint params, so it must not depend on workers
    return max(1, min(500, math.ceil(total / 64)))


def _collect(p: int, chunks: Iterable[ChunkResult]) -> Tuple[Dict[int, ClassSummary], ExtremalTracker]:
    per_class: Dict[int, ClassSummary] = {}
    extremes = ExtremalTracker(p)
    for chunk in sorted(chunks, key=lambda c: c.start):
        for m, summary in chunk.summaries.items():
            per_class[m] = per_class[m].merge(summary) if m in per_class else summary
        extremes.merge(chunk.extremes)
    return dict(sorted(per_class.items())), extremes


def run_sweep(
    p: int,
    g_range: Optional[Tuple[int, int]] = None,
    classes: Optional[Iterable[int]] = None,
    workers: int = 1,
    checkpoint_path: Optional[Union[str, Path]] = None,
    chunk_size: Optional[int] = None,
    progress: Optional[ProgressCallback] = None,
    stop_after: Optional[int] = None,
) -> SweepResult:
    """Sweep every base g of p, aggregating per m-class.

    Args:
        p: Prime modulus
        g_range: Inclusive (start, end) subrange of 1..p-1 (default: all)
        classes: m values to include (default: all)
        workers: Worker processes; 1 runs in-process
        checkpoint_path: JSON file recording completed chunks for resuming
        chunk_size: Bases per chunk (default: derived from the range)
        progress: Called as progress(done_chunks, total_chunks)
        stop_after: Compute at most this many new chunks, then return a
            partial result (interrupts a run for later resumption)

    Returns:
        SweepResult(per_class, combined, records, partial, classes); a sweep
        restricted by g_range, classes or stop_after is partial
    """
    ctx = _context(p)
    g_start, g_end = g_range if g_range is not None else (1, p - 1)
    if not 1 <= g_start <= g_end <= p - 1:
        raise ValueError(f"g range {g_start}..{g_end} is not within 1..{p - 1}")
    class_filter = tuple(sorted(set(classes))) if classes is not None else None
    if class_filter is not None:
        unknown = [m for m in class_filter if m not in ctx.class_counts]
        if unknown:
            raise ValueError(f"classes {unknown} do not divide p-1={p - 1}")
    workers = max(1, int(workers))
    total = g_end - g_start + 1
    chunk_size = chunk_size or default_chunk_size(total)
    plan = plan_chunks(g_start, g_end, chunk_size)
    logger.info(
        f"Sweep p={p} g={g_start}..{g_end}: {len(plan)} chunks of {chunk_size}, {workers} workers"
    )

    checkpoint = None
    done: Dict[int, ChunkResult] = {}
    if checkpoint_path is not None:
        params = {
            "p": p,
            "g_start": g_start,
            "g_end": g_end,
            "chunk_size": chunk_size,
            "classes": list(class_filter) if class_filter is not None else None,
        }
        checkpoint = Checkpoint(checkpoint_path, params).load()
        for start, data in checkpoint.chunks.items():
            try:
                done[start] = ChunkResult.from_dict(p, data)
            except (KeyError, TypeError, ValueError) as e:
                raise CheckpointError(f"corrupt chunk {start} in {checkpoint_path}: {e}") from e

    pending = [(lo, hi) for lo, hi in plan if lo not in done]
    if stop_after is not None:
        pending = pending[: max(0, stop_after)]
    tasks = [(p, lo, hi, class_filter) for lo, hi in pending]

    def finish(data: Dict[str, Any]) -> None:
        chunk = ChunkResult.from_dict(p, data)
        done[chunk.start] = chunk
        if checkpoint is not None:
            checkpoint.record(chunk.start, data)
        if progress is not None:
            progress(len(done), len(plan))

    if progress is not None:
        progress(len(done), len(plan))
    if workers == 1 or len(tasks) <= 1:
        for task in tasks:
            finish(_sweep_chunk_task(task))
    else:
        with multiprocessing.Pool(processes=min(workers, len(tasks))) as pool:
            for data in pool.imap_unordered(_sweep_chunk_task, tasks):
                finish(data)

    per_class, extremes = _collect(p, done.values())
    combined = combine(per_class.values(), p)
    partial = len(done) < len(plan) or (g_start, g_end) != (1, p - 1) or class_filter is not None
    if partial:
        logger.info(f"Sweep p={p} partial: {len(done)}/{len(plan)} chunks")
    return SweepResult(
        per_class=per_class,
        combined=combined,
        records=extremes.records(),
        partial=partial,
        classes=class_filter,
    )
