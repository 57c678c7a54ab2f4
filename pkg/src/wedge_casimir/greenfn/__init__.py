"""Radial Green kernel of the wedge mode expansion."""

from .kernel import (
    radial_green,
    jump_check,
    ode_residual,
    angular_mode,
    green_partial_sum,
)

__all__ = [
    "radial_green",
    "jump_check",
    "ode_residual",
    "angular_mode",
    "green_partial_sum",
]
