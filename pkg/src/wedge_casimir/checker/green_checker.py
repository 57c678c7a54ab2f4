"""Green-kernel suite: jump condition, ODE residual, Dirichlet walls, symmetry."""

import math

from ..greenfn import green_partial_sum, jump_check, ode_residual, radial_green
from ..models import SpectralMode, WedgeGeometry
from .base import SuiteChecker


ORDERS = [0.5, 1.0, 2.0, 5.0]
MOMENTA = [0.5, 1.0, 3.0]
SOURCES = [0.5, 1.0, 2.0]


def _mode(nu: float, lambda_e: float) -> SpectralMode:
    return SpectralMode(m=1, nu=nu, lambda_e=lambda_e)


class GreenChecker(SuiteChecker):
    """Structural checks on the radial kernel and the truncated mode sum."""

    suite = "green"

    def _run(self) -> None:
        self._check_jump_condition()
        self._check_ode_convergence()
        self._check_dirichlet_walls()
        self._check_symmetry()

    def _check_jump_condition(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            for lambda_e in MOMENTA:
                for rho_prime in SOURCES:
                    h = 1e-3 * rho_prime
                    error = abs(jump_check(_mode(nu, lambda_e), rho_prime, h) + 1.0 / rho_prime)
                    worst = max(worst, error / (10.0 * h / rho_prime**2))
        self._record("jump -1/rho' within 10 h/rho'^2 (ratio)", worst, 1.0)

    def _check_ode_convergence(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            for lambda_e in MOMENTA:
                for rho_prime in SOURCES:
                    mode = _mode(nu, lambda_e)
                    rho = 0.5 * rho_prime
                    h = 0.02 * rho
                    coarse = ode_residual(mode, rho, rho_prime, h)
                    fine = ode_residual(mode, rho, rho_prime, h / 2.0)
                    worst = max(worst, abs(fine / coarse))
        self._record("ODE residual second-order under h-halving (ratio)", worst, 0.3)

    def _check_dirichlet_walls(self) -> None:
        beta = math.pi / 2
        worst = 0.0
        for phi in (0.0, beta):
            for phi_prime in (0.0, beta / 3, beta):
                geom = WedgeGeometry(beta=beta, rho=1.0, phi=phi)
                worst = max(worst, abs(green_partial_sum(geom, 2.0, phi_prime, 1.0, 30)))
                geom = WedgeGeometry(beta=beta, rho=1.0, phi=phi_prime)
                worst = max(worst, abs(green_partial_sum(geom, 2.0, phi, 1.0, 30)))
        self._record("Dirichlet walls phi, phi' in {0, beta}", worst, 1e-15)

    def _check_symmetry(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            mode = _mode(nu, 1.5)
            worst = max(worst, abs(radial_green(mode, 1.0, 2.0) - radial_green(mode, 2.0, 1.0)))

        beta = 2 * math.pi / 3
        forward = green_partial_sum(WedgeGeometry(beta=beta, rho=0.7, phi=0.4), 1.3, 1.1, 1.0, 25)
        backward = green_partial_sum(WedgeGeometry(beta=beta, rho=1.3, phi=1.1), 0.7, 0.4, 1.0, 25)
        worst = max(worst, abs(forward - backward))
        self._record("kernel and mode-sum symmetry", worst, 0.0)
