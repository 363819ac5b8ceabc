"""
Progress reporter for long-running commands (sweeps, self-tests).

Status lines go to stderr so stdout stays clean for tables and reports.
"""

import sys


# ANSI color codes
class Colors:
    CYAN = "\033[36m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    RED = "\033[31m"
    RESET = "\033[0m"


def _emit(text: str, end: str) -> None:
    print(text, file=sys.stderr, end=end, flush=True)


def report_start(message: str, end: str = "\n", color: str = Colors.CYAN) -> None:
    """
    Report that an operation is starting.

    Args:
        message: The message to display
        end: String appended after the message (default: "\n")
        color: The color to use (default: CYAN)
    """
    _emit(f" {color}▶ {message}{Colors.RESET}", end)


def report_result(message: str, end: str = "\n") -> None:
    """Report a successful result (a passed check, a finished sweep)."""
    _emit(f"{Colors.GREEN} ✅ {message}{Colors.RESET}", end)


def report_error(message: str, end: str = "\n") -> None:
    """Report an error or a failed check."""
    _emit(f"{Colors.RED}❌ {message}{Colors.RESET}", end)


def report_warning(message: str, end: str = "\n") -> None:
    _emit(f"{Colors.YELLOW}⚠️  {message}{Colors.RESET}", end)


def report_info(message: str, end: str = "\n") -> None:
    _emit(f"{Colors.CYAN}ℹ️  {message}{Colors.RESET}", end)
