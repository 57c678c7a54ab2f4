"""Utility functions and helpers."""

from .config import (
    get_settings,
    get_numerics_config,
    load_yaml_config,
    load_run_file,
    NumericsConfig,
)

__all__ = [
    "get_settings",
    "get_numerics_config",
    "load_yaml_config",
    "load_run_file",
    "NumericsConfig",
]
