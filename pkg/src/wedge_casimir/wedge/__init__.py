"""Wedge stress pipeline: mode sums, renormalization, closed forms and torque."""

from .mode_sum import (
    tphiphi_mode_term,
    tphiphi_mode_term_quadrature,
    tphiphi_mode_sum,
    regulated_sum,
)
from .extrapolation import neville_extrapolate, extrapolate_to_zero
from .stress import (
    PARALLEL_PLATE_LIMIT,
    epsilon_grid,
    tphiphi_renormalized,
    tphiphi_closed,
    torque_density,
    parallel_plate_limit,
)

__all__ = [
    "tphiphi_mode_term",
    "tphiphi_mode_term_quadrature",
    "tphiphi_mode_sum",
    "regulated_sum",
    "neville_extrapolate",
    "extrapolate_to_zero",
    "PARALLEL_PLATE_LIMIT",
    "epsilon_grid",
    "tphiphi_renormalized",
    "tphiphi_closed",
    "torque_density",
    "parallel_plate_limit",
]
