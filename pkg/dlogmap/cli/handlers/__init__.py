"""CLI command handlers."""

from .census import handle_census
from .config import (
    handle_config,
    handle_get_config,
    handle_set_config,
    handle_show_config,
    handle_unset_config,
)
from .predict import handle_constants, handle_predict
from .selftest import handle_selftest
from .sweep import handle_sweep

__all__ = [
    "handle_census",
    "handle_config",
    "handle_get_config",
    "handle_set_config",
    "handle_show_config",
    "handle_unset_config",
    "handle_constants",
    "handle_predict",
    "handle_selftest",
    "handle_sweep",
]
