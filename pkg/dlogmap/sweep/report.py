"""
Human-readable sweep reports: class counts, comparisons against the random
models, and extremal data, as rich text tables or markdown.
"""

import io
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from rich.console import Console
from rich.table import Table

from ..numtheory import PrimeContext
from .runner import SweepResult
from .summary import (
    LONGEST_CYCLE,
    LONGEST_TAIL,
    MAX_CYCLE_EQUALS_ONE,
    ClassSummary,
    ExtremalRecord,
)

# Configure logger for this module
logger = logging.getLogger(__name__)

REPORT_FORMATS = ("text", "markdown")

LABELS = {
    "components": "Components",
    "cyclic_nodes": "Cyclic Nodes",
    "image_nodes": "Image Nodes",
    "avg_cycle": "Avg Cycle",
    "avg_tail": "Avg Tail",
    "max_cycle": "Max Cycle",
    "max_tail": "Max Tail",
}

COMBINED_ROWS = ("components", "cyclic_nodes", "image_nodes", "avg_cycle", "avg_tail", "max_cycle", "max_tail")
PERMUTATION_ROWS = ("components", "avg_cycle", "max_cycle")
BINARY_ROWS = COMBINED_ROWS

Rows = List[Tuple[str, ...]]


def _fmt(value: Optional[Union[float, Fraction]]) -> str:
    return "-" if value is None else f"{float(value):.3f}"


def _fmt_pct(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.3f}%"


def _format_factors(ctx: PrimeContext) -> str:
    parts = [f"{q}^{e}" if e > 1 else str(q) for q, e in ctx.factors]
    return "*".join(parts) or "1"


def _count_rows(result: SweepResult, ctx: PrimeContext) -> Rows:
    rows = []
    names = {1: "Permutations", 2: "Binary Functional Graphs"}
    for m in ctx.divisors:
        swept = result.per_class.get(m)
        if swept is None and m not in names:
            continue
        rows.append((
            names.get(m, f"{m}-ary"),
            str(m),
            str(ctx.class_counts[m]),
            str(swept.graph_count if swept else 0),
        ))
    rows.append(("Total Functional Graphs", "-", str(ctx.p - 1), str(result.combined.graph_count)))
    return rows


def _comparison_rows(summary: Optional[ClassSummary], fields: Sequence[str]) -> Rows:
    if summary is None or not summary.graph_count:
        return []
    means = summary.means()
    prediction = summary.predicted()
    errors = summary.pct_error()
    rows = []
    for name in fields:
        expected = prediction.get(name) if prediction else None
        rows.append((LABELS[name], _fmt(means[name]), _fmt(expected), _fmt_pct(errors[name])))
    return rows


def _extremal_lines(records: Sequence[ExtremalRecord]) -> List[str]:
    lines = []
    for record in records:
        witnesses = ", ".join(str(g) for g in record.witnesses)
        if record.statistic == LONGEST_CYCLE:
            lines.append(f"Longest cycle: {record.value} (g = {witnesses})")
        elif record.statistic == LONGEST_TAIL:
            lines.append(f"Longest tail: {record.value} (g = {witnesses})")
        elif record.statistic == MAX_CYCLE_EQUALS_ONE:
            lines.append(f"Graphs with no cycle longer than one: {record.value} (g = {witnesses or 'none'})")
    return lines


def _sections(result: SweepResult) -> Tuple[str, List[Tuple[str, Tuple[str, ...], Rows]], List[str]]:
    p = result.combined.p
    ctx = PrimeContext.create(p)
    title = f"p = {p}, p - 1 = {_format_factors(ctx)}"
    if ctx.is_safe:
        title += f" (safe prime, q = {(p - 1) // 2})"
    if result.partial:
        title += " (partial sweep)"

    comparison_head = ("Statistic", "Observed", "Predicted", "Error (%)")
    # a class-filtered combined summary is not a sample of all graphs
    combined = result.combined if result.classes is None else None
    tables = [
        ("Number of graphs per class", ("Class", "m", "Expected", "Swept"), _count_rows(result, ctx)),
        ("All graphs vs. random functional graph", comparison_head,
         _comparison_rows(combined, COMBINED_ROWS)),
        ("Permutations vs. random permutation", comparison_head,
         _comparison_rows(result.per_class.get(1), PERMUTATION_ROWS)),
        ("Binary functional graphs vs. random binary functional graph", comparison_head,
         _comparison_rows(result.per_class.get(2), BINARY_ROWS)),
    ]
    return title, [t for t in tables if t[2]], _extremal_lines(result.records)


def _render_text(results: Sequence[SweepResult]) -> str:
    buffer = io.StringIO()
    console = Console(file=buffer, width=100, color_system=None, highlight=False, markup=False)
    for result in results:
        title, tables, extremal = _sections(result)
        console.rule(title)
        for caption, head, rows in tables:
            console.print(caption)
            table = Table()
            for i, column in enumerate(head):
                table.add_column(column, justify="left" if i == 0 else "right")
            for row in rows:
                table.add_row(*row)
            console.print(table)
        console.print("Extremal data")
        for line in extremal:
            console.print(f"  {line}")
        console.print()
    return buffer.getvalue()


def _render_markdown(results: Sequence[SweepResult]) -> str:
    out = []
    for result in results:
        title, tables, extremal = _sections(result)
        out.append(f"## {title}\n")
        for caption, head, rows in tables:
            out.append(f"### {caption}\n")
            out.append("| " + " | ".join(head) + " |")
            out.append("|" + "|".join(["---"] + ["---:"] * (len(head) - 1)) + "|")
            for row in rows:
                out.append("| " + " | ".join(row) + " |")
            out.append("")
        out.append("### Extremal data\n")
        out.extend(f"- {line}" for line in extremal)
        out.append("")
    return "\n".join(out)


def render_report(results: Union[SweepResult, Sequence[SweepResult]], fmt: str = "text") -> str:
    """Render one or more sweep results as a report document.

    Args:
        results: Sweep result(s), one per prime; partial sweeps are labelled
        fmt: "text" (rich tables) or "markdown"

    Returns:
        str: The report
    """
    if isinstance(results, SweepResult):
        results = [results]
    if fmt == "text":
        return _render_text(results)
    if fmt == "markdown":
        return _render_markdown(results)
    raise ValueError(f"unknown report format '{fmt}', expected one of {', '.join(REPORT_FORMATS)}")
