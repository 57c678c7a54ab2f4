"""Quadrature suite: the I*K integral formula against numerical integration."""

import math

import numpy as np

from ..quad import integrate_semi_infinite, verify_integral_formula
from .base import SuiteChecker


ORDERS = [0.5, 1.0, 2.0, math.pi, 3.5, 2.0 * math.pi]
RATIOS = [0.3, 0.5, 0.9, 0.99]
RADII = [1.0, 2.0]


class QuadChecker(SuiteChecker):
    """Integral identity and scaling checks."""

    suite = "quad"

    def _run(self) -> None:
        self._check_elementary_integrals()
        self._check_integral_formula()
        self._check_radius_scaling()

    def _check_elementary_integrals(self) -> None:
        exponential = integrate_semi_infinite(lambda t: np.exp(-t)).value
        gaussian = integrate_semi_infinite(lambda t: t * np.exp(-t * t)).value
        worst = max(abs(exponential - 1.0), abs(gaussian - 0.5))
        self._record("elementary integrals e^-t, t e^-t^2", worst, 1e-12)

    def _check_integral_formula(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            for xi in RATIOS:
                for rho in RADII:
                    lhs, rhs = verify_integral_formula(nu, xi, rho)
                    worst = max(worst, abs(lhs - rhs) / abs(rhs))
        self._record("integral formula xi^nu / (rho^2 (1 - xi^2))", worst, 1e-8)

    def _check_radius_scaling(self) -> None:
        scaled = [verify_integral_formula(2.0, 0.5, rho)[0] * rho**2 for rho in (0.5, 1.0, 2.0, 10.0)]
        spread = (max(scaled) - min(scaled)) / abs(scaled[0])
        self._record("integral scales as rho^-2", spread, 1e-8)
