"""
General configuration module for managing ~/.dlogmap/config.json.

This module provides a centralized interface for all config.json-related operations.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

# Configure logger for this module
logger = logging.getLogger(__name__)


# Config file path
CONFIG_PATH = Path.home() / ".dlogmap" / "config.json"

# Environment variable overriding the worker count
WORKERS_ENV = "DLOGMAP_WORKERS"

CONFIG_KEYS = ("workers", "chunk_size", "out_dir", "format", "report")
INTEGER_KEYS = ("workers", "chunk_size")


def get_config_path() -> Path:
    """Get the path to the config.json file.

    Returns:
        Path: Path to ~/.dlogmap/config.json
    """
    return CONFIG_PATH


def load_config() -> Dict[str, Any]:
    """Load the entire config.json file.

    Returns:
        Dict containing the config, or empty dict if file doesn't exist or is invalid
    """
    try:
        with open(CONFIG_PATH, "r") as f:
            config = json.load(f)
    except FileNotFoundError:
        logger.debug(f"Config file not found: {CONFIG_PATH}")
        return {}
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in config file: {e}")
        return {}
    if not isinstance(config, dict):
        logger.error(f"Config file {CONFIG_PATH} does not hold an object")
        return {}
    logger.debug(f"Loaded config from {CONFIG_PATH}: {list(config.keys())}")
    return config


def save_config(config: Dict[str, Any]) -> None:
    """Save the config dictionary to config.json.

    Args:
        config: Dictionary to save to config.json

    Raises:
        OSError: If unable to write to the config file
    """
    try:
        CONFIG_PATH.parent.mkdir(parents=True, exist_ok=True)
        with open(CONFIG_PATH, "w") as f:
            json.dump(config, f, indent=2)
    except OSError as e:
        raise OSError(f"cannot write config file {CONFIG_PATH}: {e}") from e
    logger.debug(f"Saved config to {CONFIG_PATH}")


def get_config_value(key: str) -> Optional[Any]:
    """Get a config value by key, or None if unset."""
    value = load_config().get(key)
    logger.debug(f"Getting config '{key}': {value}")
    return value


def set_config_value(key: str, value: Any) -> None:
    logger.debug(f"Setting config '{key}' = {value}")
    config = load_config()
    config[key] = value
    save_config(config)


def unset_config_value(key: str) -> bool:
    """Remove a config value by key.

    Returns:
        bool: True if the key was removed, False if it didn't exist
    """
    config = load_config()
    if key in config:
        del config[key]
        save_config(config)
        logger.info(f"Removed config key: {key}")
        return True
    logger.debug(f"Config key not found for removal: {key}")
    return False


def parse_config_value(key: str, value: str) -> Any:
    """Convert a CLI string to the stored type for ``key``.

    Raises:
        ValueError: If the key is unknown or the value has the wrong form
    """
    if key not in CONFIG_KEYS:
        raise ValueError(f"unknown config key '{key}', expected one of {', '.join(CONFIG_KEYS)}")
    if key in INTEGER_KEYS:
        try:
            number = int(value)
        except ValueError:
            raise ValueError(f"{key} must be an integer, got '{value}'") from None
        if number < 1:
            raise ValueError(f"{key} must be >= 1, got {number}")
        return number
    return value


def set_config_from_cli(key_value: str) -> Tuple[str, Any]:
    """Set a config key-value pair from CLI input.

    Args:
        key_value: A string in the format "KEY=VALUE"

    Returns:
        tuple: (key, value) that was set

    Raises:
        ValueError: If the format is invalid
    """
    if "=" not in key_value:
        raise ValueError("--set requires KEY=VALUE format")
    key, value = key_value.split("=", 1)
    key = key.strip()
    parsed = parse_config_value(key, value.strip())
    set_config_value(key, parsed)
    return key, parsed


def get_config_from_cli(key: str) -> Optional[str]:
    """Get a config value from CLI, as a printable string.

    Raises:
        FileNotFoundError: If config file doesn't exist
    """
    if not CONFIG_PATH.exists():
        raise FileNotFoundError(f"Config file not found: {CONFIG_PATH}")
    value = load_config().get(key)
    if value is None:
        return None
    if not isinstance(value, str):
        return json.dumps(value)
    return value


def resolve_workers(cli_value: Optional[int] = None) -> int:
    """Determine the worker count.

    Priority:
    1. --workers from the command line
    2. DLOGMAP_WORKERS environment variable
    3. ``workers`` from config.json
    4. os.cpu_count()

    Returns:
        int: Worker count (>= 1)
    """
    if cli_value is not None:
        if cli_value < 1:
            raise ValueError(f"--workers must be >= 1, got {cli_value}")
        return cli_value

    env_value = os.getenv(WORKERS_ENV)
    if env_value:
        try:
            workers = int(env_value)
        except ValueError:
            raise ValueError(f"{WORKERS_ENV} must be an integer, got '{env_value}'") from None
        if workers < 1:
            raise ValueError(f"{WORKERS_ENV} must be >= 1, got {workers}")
        logger.debug(f"Workers from env: {workers}")
        return workers

    config_value = get_config_value("workers")
    if config_value is not None:
        try:
            workers = int(config_value)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring invalid workers value in config: {config_value!r}")
        else:
            if workers >= 1:
                logger.debug(f"Workers from config: {workers}")
                return workers
            logger.warning(f"Ignoring invalid workers value in config: {workers}")

    return os.cpu_count() or 1
