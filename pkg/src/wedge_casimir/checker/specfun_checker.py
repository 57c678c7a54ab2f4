"""Special-function suite: Wronskian, closed forms, scaling and monotonicity."""

import math

from ..specfun import (
    bessel_i,
    bessel_i_prime,
    bessel_ik_scaled,
    bessel_k,
    bessel_k_prime,
)
from .base import SuiteChecker


ORDERS = [0.0, 0.5, 1.0, 1.7, math.pi, 10.0, 50.0]
ARGUMENTS = [0.1, 1.0, 2.0, 10.0, 100.0]


class SpecfunChecker(SuiteChecker):
    """Identity-based checks on I_nu and K_nu."""

    suite = "specfun"

    def _run(self) -> None:
        self._check_reference_values()
        self._check_wronskian()
        self._check_half_order()
        self._check_scaled_consistency()
        self._check_large_argument_product()
        self._check_positivity_and_monotonicity()

    def _check_reference_values(self) -> None:
        references = [
            (bessel_i, 0.0, 1.0, 1.2660658777520084),
            (bessel_k, 0.0, 1.0, 0.42102443824070834),
            (bessel_k, 0.5, 1.0, 0.4610685044478946),
        ]
        worst = max(abs(f(nu, x) / expected - 1.0) for f, nu, x, expected in references)
        self._record("reference values I_0(1), K_0(1), K_1/2(1)", worst, 1e-13)

    def _check_wronskian(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            for x in ARGUMENTS:
                w = bessel_i(nu, x) * bessel_k_prime(nu, x) - bessel_i_prime(nu, x) * bessel_k(nu, x)
                worst = max(worst, abs(x * w + 1.0))
        self._record("Wronskian x(I K' - I' K) = -1", worst, 1e-10)

    def _check_half_order(self) -> None:
        worst = max(
            abs(bessel_k(0.5, x) / (math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)) - 1.0)
            for x in (0.5, 1.0, 5.0)
        )
        self._record("K_1/2 closed form", worst, 1e-12)

    def _check_scaled_consistency(self) -> None:
        worst = 0.0
        for nu in ORDERS:
            for x in ARGUMENTS:
                pair = bessel_ik_scaled(nu, x)
                worst = max(worst, abs(math.exp(-x) * bessel_i(nu, x) / pair.i_scaled - 1.0))
        self._record("scaled/unscaled I consistency", worst, 1e-13)

    def _check_large_argument_product(self) -> None:
        x = 700.0
        deviation = abs(bessel_ik_scaled(0.0, x).product * 2.0 * x - 1.0)
        self._record("I_0 K_0 ~ 1/(2x) at x = 700", deviation, 1e-2)

    def _check_positivity_and_monotonicity(self) -> None:
        violations = 0
        for nu in ORDERS:
            i_values = [bessel_i(nu, x) for x in ARGUMENTS]
            k_values = [bessel_k(nu, x) for x in ARGUMENTS]
            violations += sum(1 for v in i_values + k_values if not v > 0.0)
            violations += sum(1 for a, b in zip(i_values, i_values[1:]) if not b > a)
            violations += sum(1 for a, b in zip(k_values, k_values[1:]) if not b < a)
        self._record("positivity and monotonicity violations", violations, 0)
