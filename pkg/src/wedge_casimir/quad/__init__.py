"""Semi-infinite quadrature."""

from .semi_infinite import (
    integrate_semi_infinite,
    integral_formula_quadrature,
    verify_integral_formula,
)

__all__ = [
    "integrate_semi_infinite",
    "integral_formula_quadrature",
    "verify_integral_formula",
]
