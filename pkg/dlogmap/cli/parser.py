"""CLI argument parser for dlogmap."""

import argparse

from .. import __version__
from ..asymptotics import DEFAULT_TOLERANCE, MODELS
from ..sweep import OUTPUT_FORMATS, REPORT_FORMATS, SELFTEST_LEVELS


def create_parser() -> argparse.ArgumentParser:
    """Create and configure the CLI argument parser.

    Returns:
        argparse.ArgumentParser: Configured argument parser
    """
    parser = argparse.ArgumentParser(
        prog="dlogmap",
        description="Structure of the functional graphs x -> g^x mod p, measured exhaustively "
                    "and compared with random mapping statistics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Environment Variables:
  DLOGMAP_WORKERS    - Worker processes for sweeps (overrides the config file)

Configuration:
  Defaults for workers, chunk_size, out_dir, format and report can be stored
  in ~/.dlogmap/config.json with `dlogmap config --set KEY=VALUE`

Examples:
  dlogmap sweep --prime 2027                                 # Sweep every g, print the report
  dlogmap sweep --prime 100043 --workers 8 --out results     # Write summaries.csv and extremal.csv
  dlogmap sweep --prime 100043 --checkpoint run.json         # Resumable sweep
  dlogmap sweep --primes-file primes.txt --report markdown   # Several primes, markdown report
  dlogmap sweep --prime 2027 --class 2 --g-start 1 --g-end 500  # Binary graphs in a subrange
  dlogmap predict --model binary --n 100042                  # Asymptotic predictions
  dlogmap census --prime 100057                              # Graphs per m-class
  dlogmap constants --tol 1e-10                              # Integral constants
  dlogmap selftest --level full                              # Oracle suites plus a p=2027 sweep
  dlogmap config --set workers=8                             # Set config value
  dlogmap --log=info,debug sweep --prime 211                 # Enable logging
        """
    )

    parser.add_argument(
        "--log",
        metavar="LEVELS",
        help="Enable logging (e.g., --log=info,debug or --log=warning,error)"
    )

    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )

    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    sweep = commands.add_parser("sweep", help="Analyze the graph of every g for one or more primes")
    sweep.add_argument("--prime", metavar="P", type=int, action="append", help="Prime modulus (repeatable)")
    sweep.add_argument("--primes-file", metavar="F", help="File with one prime per line (# comments allowed)")
    sweep.add_argument("--g-start", metavar="A", type=int, help="First base (default: 1)")
    sweep.add_argument("--g-end", metavar="B", type=int, help="Last base (default: p-1)")
    sweep.add_argument(
        "--class",
        dest="classes",
        metavar="M",
        default="all",
        help="m-classes to include: 'all' or a comma-separated list such as 1,2",
    )
    sweep.add_argument("--workers", metavar="K", type=int, help="Worker processes (default: $DLOGMAP_WORKERS, config, CPU count)")
    sweep.add_argument("--chunk-size", metavar="N", type=int, help="Bases per work chunk")
    sweep.add_argument("--checkpoint", metavar="PATH", help="Checkpoint file for resumable sweeps")
    sweep.add_argument("--out", metavar="DIR", help="Directory for machine-readable outputs")
    sweep.add_argument("--format", choices=OUTPUT_FORMATS, help="Output file format (default: csv)")
    sweep.add_argument("--report", choices=REPORT_FORMATS, help="Report format printed to stdout (default: text)")
    sweep.add_argument("--quiet", action="store_true", help="Do not print the report")

    predict = commands.add_parser("predict", help="Print the asymptotic predictions for one model")
    predict.add_argument("--model", choices=MODELS, required=True, help="Random model")
    predict.add_argument("--n", type=int, required=True, help="Graph size")

    selftest = commands.add_parser("selftest", help="Run the built-in oracle checks")
    selftest.add_argument("--level", choices=SELFTEST_LEVELS, default="quick", help="quick or full (default: quick)")
    selftest.add_argument("--workers", metavar="K", type=int, help="Worker processes for the full-level sweep")

    constants = commands.add_parser("constants", help="Evaluate the constants used by the predictions")
    constants.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_TOLERANCE,
        help=f"Absolute quadrature tolerance (default: {DEFAULT_TOLERANCE})",
    )

    census = commands.add_parser("census", help="Count the graphs of each m-class for a prime")
    census.add_argument("--prime", metavar="P", type=int, required=True, help="Prime modulus")

    config = commands.add_parser("config", help="Show or change ~/.dlogmap/config.json")
    group = config.add_mutually_exclusive_group(required=True)
    group.add_argument("--get", metavar="KEY", help="Print a config value")
    group.add_argument("--set", metavar="KEY=VALUE", help="Set a config value")
    group.add_argument("--unset", metavar="KEY", help="Remove a config value")
    group.add_argument("--show", action="store_true", help="Print the whole config")

    return parser


def parse_args(argv=None):
    """Parse command line arguments.

    Returns:
        argparse.Namespace: Parsed arguments
    """
    parser = create_parser()
    return parser.parse_args(argv)
