"""Configuration-related CLI handlers."""

import json
import sys

from ...general_config import (
    get_config_from_cli,
    get_config_path,
    load_config,
    set_config_from_cli,
    unset_config_value,
)


def handle_get_config(key: str) -> int:
    """Handle config --get.

    Args:
        key: Configuration key to retrieve

    Returns:
        int: Exit code (0 for success, non-zero for error)
    """
    try:
        value = get_config_from_cli(key)
    except FileNotFoundError:
        print(f"Config file not found: {get_config_path()}", file=sys.stderr)
        return 1
    if value is None:
        print(f"Key '{key}' not found in config", file=sys.stderr)
        return 1
    print(value)
    return 0


def handle_set_config(value_str: str) -> int:
    """Handle config --set KEY=VALUE."""
    try:
        key, value = set_config_from_cli(value_str)
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        print("Usage: dlogmap config --set workers=8", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    print(f"[OK] Set {key}={value} in {get_config_path()}")
    return 0


def handle_unset_config(key: str) -> int:
    try:
        removed = unset_config_value(key)
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    if removed:
        print(f"[OK] Removed '{key}' from {get_config_path()}")
        return 0
    print(f"Key '{key}' not found in config", file=sys.stderr)
    return 1


def handle_show_config() -> int:
    print(f"# {get_config_path()}")
    print(json.dumps(load_config(), indent=2))
    return 0


def handle_config(args) -> int:
    """Dispatch the config subcommand options."""
    if args.get:
        return handle_get_config(args.get)
    if args.set:
        return handle_set_config(args.set)
    if args.unset:
        return handle_unset_config(args.unset)
    return handle_show_config()
