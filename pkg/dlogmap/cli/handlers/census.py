"""Class census CLI handler."""

import sys

from rich.console import Console
from rich.table import Table

from ...numtheory import class_census, count_m_ary, prime_context


def handle_census(args) -> int:
    """Print, for every divisor m of p-1, the expected and the observed class size.

    Args:
        args: Parsed command line arguments

    Returns:
        int: Exit code (0 when the order-based census matches phi((p-1)/m))
    """
    try:
        ctx = prime_context(args.prime)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1

    census = class_census(ctx)
    title = f"p = {ctx.p}"
    if ctx.is_safe:
        title += f" (safe prime, q = {(ctx.p - 1) // 2})"
    console = Console()
    console.print(title)
    table = Table()
    table.add_column("m", justify="right")
    table.add_column("phi((p-1)/m)", justify="right")
    table.add_column("Census", justify="right")
    mismatches = 0
    for m in ctx.divisors:
        expected = count_m_ary(ctx, m)
        if census[m] != expected:
            mismatches += 1
        table.add_row(str(m), str(expected), str(census[m]))
    table.add_row("total", str(ctx.p - 1), str(sum(census.values())))
    console.print(table)

    if mismatches:
        print(f"Error: {mismatches} classes differ from phi((p-1)/m)", file=sys.stderr)
        return 1
    return 0
