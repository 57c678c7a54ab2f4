"""Wedge suite: series extrapolation against the closed form, torque, limits, scaling."""

import math
from typing import Optional

from ..models import PointSplitting, WedgeGeometry
from ..wedge import (
    PARALLEL_PLATE_LIMIT,
    parallel_plate_limit,
    regulated_sum,
    tphiphi_closed,
    tphiphi_mode_term,
    tphiphi_mode_term_quadrature,
    tphiphi_renormalized,
    torque_density,
)
from .base import SuiteChecker


ANGLES = [math.pi / 4, math.pi / 2, 2 * math.pi / 3, math.pi, 3 * math.pi / 2, 2 * math.pi]
RADII = [0.5, 1.0, 3.0]


class WedgeChecker(SuiteChecker):
    """Oracle-equivalence and invariant checks on the stress pipeline."""

    suite = "wedge"

    def __init__(self, tol: Optional[float] = None):
        super().__init__()
        self.tol = tol

    def _run(self) -> None:
        self._check_closed_form_oracle()
        self._check_regulated_routes()
        self._check_torque_consistency()
        self._check_sign_structure()
        self._check_scaling_laws()
        self._check_parallel_plate_limit()

    def _check_closed_form_oracle(self) -> None:
        worst = 0.0
        for beta in ANGLES:
            for rho in RADII:
                geom = WedgeGeometry(beta=beta, rho=rho)
                series, _ = tphiphi_renormalized(geom, self.tol)
                closed = tphiphi_closed(geom).value
                worst = max(worst, abs(series.value - closed) / max(1e-6, abs(closed)))
        self._record("series extrapolation matches closed form", worst, 1e-7)

    def _check_regulated_routes(self) -> None:
        geom = WedgeGeometry(beta=math.pi / 2, rho=1.0)
        worst = 0.0
        for epsilon in (0.1, 0.05):
            split = PointSplitting.from_epsilon(epsilon)
            closed = regulated_sum(geom, split)
            direct = regulated_sum(geom, split, method="direct")
            worst = max(worst, abs(direct / closed - 1.0))
        self._record("direct vs cancellation-safe regulated sum", worst, 1e-8)

        split = PointSplitting.from_xi(0.5)
        worst = max(
            abs(tphiphi_mode_term_quadrature(m, geom, split) / tphiphi_mode_term(m, geom, split) - 1.0)
            for m in (1, 2, 3)
        )
        self._record("mode term by quadrature vs integral formula", worst, 1e-8)

    def _check_torque_consistency(self) -> None:
        h = 1e-4
        worst = 0.0
        for beta in ANGLES[:-1]:
            for rho in RADII:
                upper = tphiphi_closed(WedgeGeometry(beta=beta + h, rho=rho)).value
                lower = tphiphi_closed(WedgeGeometry(beta=beta - h, rho=rho)).value
                finite_difference = -(upper - lower) / (2.0 * h) / rho
                analytic = torque_density(WedgeGeometry(beta=beta, rho=rho)).value
                worst = max(worst, abs(finite_difference / analytic - 1.0))
        self._record("torque = -(1/rho) d T/d beta", worst, 1e-6)

        spot = torque_density(WedgeGeometry(beta=math.pi / 2, rho=1.0)).value
        exact = -32.0 / (120.0 * math.pi**3)
        self._record("torque spot value beta = pi/2", abs(spot / exact - 1.0), 1e-12)

    def _check_sign_structure(self) -> None:
        violations = 0
        for beta in ANGLES:
            geom = WedgeGeometry(beta=beta, rho=1.0)
            stress = tphiphi_closed(geom).value
            if beta < math.pi and not stress < 0.0:
                violations += 1
            if beta == math.pi and stress != 0.0:
                violations += 1
            if beta > math.pi and not stress > 0.0:
                violations += 1
            if not torque_density(geom).value < 0.0:
                violations += 1
        self._record("sign structure violations", violations, 0)

    def _check_scaling_laws(self) -> None:
        worst = 0.0
        for beta in (math.pi / 4, math.pi / 2, 3 * math.pi / 2):
            stress = [tphiphi_closed(WedgeGeometry(beta=beta, rho=rho)).value * rho**4 for rho in (0.1, 1.0, 10.0)]
            torque = [torque_density(WedgeGeometry(beta=beta, rho=rho)).value * rho**5 for rho in (0.1, 1.0, 10.0)]
            for series in (stress, torque):
                worst = max(worst, (max(series) - min(series)) / abs(series[1]))
        self._record("rho^-4 stress and rho^-5 torque scaling", worst, 1e-12)

    def _check_parallel_plate_limit(self) -> None:
        deviation = abs(parallel_plate_limit(1.0, 1e-3) - PARALLEL_PLATE_LIMIT)
        self._record("parallel-plate limit -pi^2/480", deviation, 1e-11)

        deviations = [parallel_plate_limit(1.0, beta) - PARALLEL_PLATE_LIMIT for beta in (0.1, 0.05, 0.025)]
        ratios = [b / a for a, b in zip(deviations, deviations[1:])]
        worst = max(abs(r * 16.0 - 1.0) for r in ratios)
        self._record("limit deviation shrinks as beta^4", worst, 1e-3)
