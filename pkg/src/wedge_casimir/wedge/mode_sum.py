r"""Point-split mode sums for the phi-phi stress component.

At split ratio xi = e^{-epsilon} the m-th summand of the wedge series is

.. math::
    t_m = \frac{\hbar c}{2\pi^2\rho^4} \, p^3 m^2 \, \frac{\xi^{m p}}{1-\xi^2},
    \qquad p = \pi/\beta

The overall constant is fixed so that the renormalized xi -> 1 limit
reproduces the closed form -(hbar c / 480 pi^2 rho^4)(p^4 - 1).

The free-space subtrahend is the same series at p = 1 (beta = pi).
"""

import logging
import math
from functools import lru_cache
from typing import Literal

import numpy as np
from scipy import special

from ..errors import AccuracyLossError, DomainError
from ..models import PointSplitting, WedgeGeometry
from ..quad import integral_formula_quadrature
from ..utils import get_numerics_config


logger = logging.getLogger(__name__)

SumMethod = Literal["closed", "direct"]

_TWO_PI_SQ = 2.0 * math.pi**2


def _check_mode_index(m: int) -> int:
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError("m", f"mode index must be an integer >= 1, got {m!r}")
    return int(m)


def _split_denominator(epsilon: float) -> float:
    """1 - xi^2 without cancellation."""
    return -math.expm1(-2.0 * epsilon)


def tphiphi_mode_term(m: int, geom: WedgeGeometry, split: PointSplitting) -> float:
    """
    m-th summand of the regulated wedge series (natural units).

    Args:
        m: Mode index >= 1
        geom: Wedge angle and radius
        split: Point-splitting regulator

    Returns:
        Positive summand; summing over m and subtracting the beta = pi
        series gives regulated_sum
    """
    m = _check_mode_index(m)
    p = geom.p
    return (
        p**3 * m * m * math.exp(-m * p * split.epsilon)
        / (_TWO_PI_SQ * geom.rho**4 * _split_denominator(split.epsilon))
    )


def tphiphi_mode_term_quadrature(m: int, geom: WedgeGeometry, split: PointSplitting) -> float:
    """
    Same summand, with the lambda' integral done by quadrature.

    After frequency rotation and the polar substitution of the (omega, k)
    plane, each mode carries nu^2 (double angular derivative) times pi/beta
    (mode normalization) times the radial integral of lambda' I_nu K_nu at
    split radii. The integral is evaluated numerically instead of by its
    closed form.
    """
    m = _check_mode_index(m)
    p = geom.p
    nu = m * p
    integral = integral_formula_quadrature(nu, split.xi, geom.rho).value
    return nu**2 * p * integral / (_TWO_PI_SQ * geom.rho**2)


def _power_sum(a: float) -> float:
    """sum_{m>=1} m^2 e^{-m a} = x(1+x)/(1-x)^3 with x = e^{-a}."""
    x = math.exp(-a)
    return x * (1.0 + x) / (-math.expm1(-a)) ** 3


def tphiphi_mode_sum(geom: WedgeGeometry, split: PointSplitting) -> float:
    """Unrenormalized wedge series summed in closed form (diverges as epsilon^-4)."""
    p = geom.p
    return (
        p**3 * _power_sum(p * split.epsilon)
        / (_TWO_PI_SQ * geom.rho**4 * _split_denominator(split.epsilon))
    )


@lru_cache(maxsize=8)
def _bernoulli_coefficients(n_terms: int) -> np.ndarray:
    """c_j = B_{2j+6} / ((2j+6) (2j+3)!) for the odd powers a^{2j+3}."""
    bernoulli = special.bernoulli(2 * n_terms + 6)
    return np.array([
        bernoulli[2 * j + 6] / ((2 * j + 6) * math.factorial(2 * j + 3))
        for j in range(n_terms)
    ])


def _regular_part(a: float) -> float:
    """
    h(a) = sum m^2 e^{-m a} - 2/a^3 + a/120, regular at a = 0.

    Small a uses the Bernoulli expansion h(a) = a^3/1512 - ...; larger a
    the geometric-series closed form directly.
    """
    config = get_numerics_config().mode_sum
    if a < config.series_switch:
        coefficients = _bernoulli_coefficients(config.bernoulli_terms)
        return a**3 * float(np.polynomial.polynomial.polyval(a * a, coefficients))
    return _power_sum(a) - 2.0 / a**3 + a / 120.0


def _direct_cutoff(a: float, relative_cutoff: float) -> int:
    """Smallest m with m^2 e^{-m a} below relative_cutoff * 2/a^3 (the sum's scale)."""
    k = math.log(1.0 / relative_cutoff)
    for _ in range(8):
        k = max(1.0, math.log(a * k * k / (2.0 * relative_cutoff)))
    return math.ceil(k / a) + 1


def _direct_numerator(p: float, epsilon: float) -> float:
    """p^3 sum m^2 xi^{m p} - sum m^2 xi^m by compensated summation in fixed m order."""
    config = get_numerics_config().mode_sum
    terms = []
    for scale, a in ((p**3, p * epsilon), (-1.0, epsilon)):
        m = np.arange(1, _direct_cutoff(a, config.direct_relative_cutoff) + 1, dtype=float)
        terms.append(scale * m * m * np.exp(-m * a))
    return math.fsum(np.concatenate(terms))


def regulated_sum(
    geom: WedgeGeometry,
    split: PointSplitting,
    method: SumMethod = "closed",
) -> float:
    """
    Wedge series minus the free (beta = pi) series at the same xi.

    Both series diverge like epsilon^-4; their difference is O(1). The
    closed path forms the difference algebraically as
    p^3 h(p eps) - h(eps) - (p^4 - 1) eps / 120 over 2 pi^2 rho^4 (1 - xi^2).
    The direct path sums both series term by term and is only accepted for
    epsilon >= direct_min_epsilon.

    Raises:
        DomainError: Unknown method
        AccuracyLossError: Result cannot be delivered to 1e-10 absolute
    """
    p = geom.p
    epsilon = split.epsilon

    if method == "closed":
        numerator = p**3 * _regular_part(p * epsilon) - _regular_part(epsilon) \
            - (p**4 - 1.0) * epsilon / 120.0
    elif method == "direct":
        minimum = get_numerics_config().mode_sum.direct_min_epsilon
        if epsilon < minimum:
            raise AccuracyLossError(
                f"direct summation needs epsilon >= {minimum}, got {epsilon}"
            )
        numerator = _direct_numerator(p, epsilon)
    else:
        raise DomainError("method", f"expected 'closed' or 'direct', got {method!r}")

    value = numerator / (_TWO_PI_SQ * geom.rho**4 * _split_denominator(epsilon))
    if not math.isfinite(value):
        raise AccuracyLossError(
            f"regulated sum not finite at beta={geom.beta}, rho={geom.rho}, epsilon={epsilon}"
        )
    return value
