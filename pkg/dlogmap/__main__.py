#!/usr/bin/env python3
"""
dlogmap - exhaustive study of the functional graphs x -> g^x mod p.

For a prime p every base g in 1..p-1 defines a self-map of {1, ..., p-1}.
The sweep command analyzes all of them, groups them by m = (p-1)/ord(g)
and compares the class means with random mapping statistics.

Usage:
    python -m dlogmap sweep --prime 2027                   # Full sweep and report
    python -m dlogmap sweep --prime 100043 --workers 8 --out results
    python -m dlogmap predict --model binary --n 100042    # Asymptotic predictions
    python -m dlogmap selftest                             # Oracle checks
"""

import sys

from .cli import create_parser
from .cli.handlers import (
    handle_census,
    handle_config,
    handle_constants,
    handle_predict,
    handle_selftest,
    handle_sweep,
)
from .cli.logging_config import setup_logging

HANDLERS = {
    "sweep": handle_sweep,
    "predict": handle_predict,
    "selftest": handle_selftest,
    "constants": handle_constants,
    "census": handle_census,
    "config": handle_config,
}


def main(argv=None) -> int:
    """Main entry point."""
    parser = create_parser()
    args = parser.parse_args(argv)

    # Configure logging based on --log argument
    try:
        setup_logging(args.log)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2

    if args.command is None:
        parser.print_help()
        return 2

    try:
        return HANDLERS[args.command](args)
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
