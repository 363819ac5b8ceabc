"""Prediction and constants CLI handlers."""

import sys

from rich.console import Console
from rich.table import Table

from ...asymptotics import (
    BINARY_MAX_TAIL_OFFSET,
    EULER_GAMMA,
    MAX_TAIL_COEFFICIENT,
    PREDICTION_FIELDS,
    ConvergenceError,
    golomb_dickman,
    max_cycle_coefficient,
    predict,
)


def handle_predict(args) -> int:
    """Handle the predict command.

    Args:
        args: Parsed command line arguments

    Returns:
        int: Exit code (0 for success, non-zero for error)
    """
    try:
        prediction = predict(args.model, args.n)
    except (ValueError, ConvergenceError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    table = Table(title=f"{prediction.model} model, n = {prediction.n}")
    table.add_column("Statistic")
    table.add_column("Expected", justify="right")
    for name in PREDICTION_FIELDS:
        value = prediction.get(name)
        table.add_row(name, "-" if value is None else f"{value:.6f}")
    Console().print(table)
    return 0


def handle_constants(args) -> int:
    """Handle the constants command (quadrature at the requested tolerance)."""
    try:
        dickman = golomb_dickman(args.tol)
        coefficient = max_cycle_coefficient(args.tol)
    except (ValueError, ConvergenceError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    table = Table(title=f"Constants (tolerance {args.tol:g})")
    table.add_column("Constant")
    table.add_column("Value", justify="right")
    table.add_row("Euler gamma", f"{EULER_GAMMA:.12f}")
    table.add_row("Golomb-Dickman lambda", f"{dickman:.12f}")
    table.add_row("sqrt(pi/2) * lambda", f"{coefficient:.12f}")
    table.add_row("sqrt(2 pi) * ln 2", f"{MAX_TAIL_COEFFICIENT:.12f}")
    table.add_row("-3 + 2 ln 2", f"{BINARY_MAX_TAIL_OFFSET:.12f}")
    Console().print(table)
    return 0
