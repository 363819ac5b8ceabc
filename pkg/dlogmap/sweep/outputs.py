"""
Machine-readable sweep outputs (CSV or JSON files).
"""

import csv
import json
import logging
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from .runner import SweepResult
from .summary import COMBINED, ClassSummary, ExtremalRecord

# Configure logger for this module
logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("csv", "json")

# CSV column suffix -> ClassSummary mean field
CSV_MEANS = {
    "components": "components",
    "cyclic": "cyclic_nodes",
    "image": "image_nodes",
    "avg_cycle": "avg_cycle",
    "avg_tail": "avg_tail",
    "max_cycle": "max_cycle",
    "max_tail": "max_tail",
}

SUMMARY_COLUMNS = (
    ["p", "m", "graph_count"]
    + [f"mean_{key}" for key in CSV_MEANS]
    + [f"predicted_{key}" for key in CSV_MEANS]
    + [f"pct_error_{key}" for key in CSV_MEANS]
)
EXTREMAL_COLUMNS = ["p", "statistic", "value", "witnesses"]

SUMMARY_FILE = "summaries"
EXTREMAL_FILE = "extremal"

_SIX_PLACES = Decimal("0.000001")


def format_decimal(value: Optional[Union[Fraction, float]]) -> str:
    """Six decimal places, round-half-even; empty string for missing values.

    Fractions are rounded exactly at 10**-6, floats from their shortest repr.
    """
    if value is None:
        return ""
    if isinstance(value, Fraction):
        # Fraction.__round__ is exact and rounds half to even
        exact = Decimal(round(value * 10**6)).scaleb(-6)
    else:
        exact = Decimal(repr(float(value)))
    return str(exact.quantize(_SIX_PLACES, rounding=ROUND_HALF_EVEN))


def _summaries(result: SweepResult) -> List[ClassSummary]:
    return [result.combined] + [result.per_class[m] for m in sorted(result.per_class)]


def _compared(result: SweepResult, summary: ClassSummary) -> bool:
    # the combined summary of a class-filtered sweep has no random model to match
    return summary.m != COMBINED or result.classes is None


def summary_row(summary: ClassSummary, compare: bool = True) -> Dict[str, str]:
    """One CSV row for a class summary (m = 0 is the combined row).

    With ``compare=False`` the predicted and error columns are left empty.
    """
    means = summary.means()
    prediction = summary.predicted() if compare else None
    errors = summary.pct_error() if compare and summary.graph_count else {}
    row = {"p": str(summary.p), "m": str(summary.m), "graph_count": str(summary.graph_count)}
    for key, name in CSV_MEANS.items():
        row[f"mean_{key}"] = format_decimal(means.get(name))
        row[f"predicted_{key}"] = format_decimal(prediction.get(name) if prediction else None)
        row[f"pct_error_{key}"] = format_decimal(errors.get(name))
    return row


def extremal_row(record: ExtremalRecord) -> Dict[str, str]:
    return {
        "p": str(record.p),
        "statistic": record.statistic,
        "value": str(record.value),
        "witnesses": ";".join(str(g) for g in record.witnesses),
    }


def _summary_document(summary: ClassSummary, compare: bool = True) -> Dict[str, Any]:
    prediction = summary.predicted() if compare else None
    return {
        "m": summary.m,
        "combined": summary.m == COMBINED,
        "model": summary.model if compare else None,
        "graph_count": summary.graph_count,
        "sums": dict(summary.sums),
        "means": {name: float(value) for name, value in summary.means().items()},
        "predicted": prediction.as_dict() if prediction else None,
        "pct_error": summary.pct_error() if compare and summary.graph_count else {},
    }


def to_document(results: Sequence[SweepResult]) -> Dict[str, Any]:
    """Hierarchical form: primes -> classes, with exact integer sums."""
    return {
        "primes": [
            {
                "p": result.combined.p,
                "partial": result.partial,
                "class_filter": list(result.classes) if result.classes is not None else None,
                "classes": [_summary_document(s, _compared(result, s)) for s in _summaries(result)],
                "extremal": [record.to_dict() for record in result.records],
            }
            for result in results
        ]
    }


def _write_csv(path: Path, columns: Sequence[str], rows: Sequence[Dict[str, str]]) -> None:
    try:
        with open(path, "w", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=list(columns))
            writer.writeheader()
            writer.writerows(rows)
    except OSError as e:
        raise OSError(f"cannot write {path}: {e}") from e


def emit_outputs(
    results: Union[SweepResult, Sequence[SweepResult]],
    out_dir: Union[str, Path],
    fmt: str = "csv",
) -> List[Path]:
    """Write sweep results to out_dir.

    Args:
        results: Sweep result(s), one per prime
        out_dir: Output directory (created if missing)
        fmt: "csv" (summaries.csv + extremal.csv) or "json" (summaries.json)

    Returns:
        List[Path]: Files written
    """
    if isinstance(results, SweepResult):
        results = [results]
    if fmt not in OUTPUT_FORMATS:
        raise ValueError(f"unknown output format '{fmt}', expected one of {', '.join(OUTPUT_FORMATS)}")
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OSError(f"cannot create output directory {out_dir}: {e}") from e

    if fmt == "json":
        path = out_dir / f"{SUMMARY_FILE}.json"
        try:
            with open(path, "w") as f:
                json.dump(to_document(results), f, indent=2)
        except OSError as e:
            raise OSError(f"cannot write {path}: {e}") from e
        written = [path]
    else:
        summary_path = out_dir / f"{SUMMARY_FILE}.csv"
        extremal_path = out_dir / f"{EXTREMAL_FILE}.csv"
        _write_csv(
            summary_path,
            SUMMARY_COLUMNS,
            [summary_row(s, _compared(result, s)) for result in results for s in _summaries(result)],
        )
        _write_csv(
            extremal_path,
            EXTREMAL_COLUMNS,
            [extremal_row(r) for result in results for r in result.records],
        )
        written = [summary_path, extremal_path]
    logger.info(f"Wrote {', '.join(str(p) for p in written)}")
    return written
