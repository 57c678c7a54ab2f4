r"""Modified Bessel functions of real order.

Thin, validated layer over the exponentially scaled routines of
``scipy.special`` (``ive``/``kve``). The scaled forms are the primary
representation:

.. math::
    \tilde{I}_\nu(x) = e^{-x} I_\nu(x), \qquad \tilde{K}_\nu(x) = e^{x} K_\nu(x)

so every I*K product the pipeline needs is formed without overflow, and
the unscaled values are reconstructed only when the caller asks for them.

Derivatives are exposed through the order recurrences only.
"""

import logging
import math
import sys
from typing import Union

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import ValidationError
from scipy import special

from ..errors import BesselOverflowError, DomainError
from ..models import BesselOrder, ScaledPair


logger = logging.getLogger(__name__)

OrderLike = Union[BesselOrder, float]

_LOG_MAX = math.log(sys.float_info.max)
# ive/kve switch to their asymptotic forms beyond this argument
_LARGE_ARGUMENT = 1.0e6


def as_order(order: OrderLike) -> BesselOrder:
    """Coerce a float to a validated BesselOrder."""
    if isinstance(order, BesselOrder):
        return order
    try:
        return BesselOrder(nu=order)
    except ValidationError as e:
        raise DomainError("nu", f"order must be finite and >= 0, got {order!r}") from e


def _check_argument(x: float, allow_zero: bool) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0 or (x == 0.0 and not allow_zero):
        bound = ">= 0" if allow_zero else "> 0"
        raise DomainError("x", f"argument must be finite and {bound}, got {x!r}")
    return x


def bessel_i(order: OrderLike, x: float) -> float:
    """
    Modified Bessel function of the first kind I_nu(x).

    Args:
        order: Order nu >= 0
        x: Argument, x >= 0 (x = 0 returns the limit)

    Returns:
        I_nu(x)

    Raises:
        DomainError: nu < 0 or x < 0
        BesselOverflowError: I_nu(x) exceeds the float range
    """
    nu = as_order(order).nu
    x = _check_argument(x, allow_zero=True)

    if x == 0.0:
        return 1.0 if nu == 0.0 else 0.0

    i_scaled = float(special.ive(nu, x))
    if i_scaled == 0.0:
        # Underflow of (x/2)^nu / Gamma(nu+1)
        return 0.0
    if not math.isfinite(i_scaled):
        raise BesselOverflowError(f"I_{nu}({x}) is not representable")

    if x < _LOG_MAX:
        return i_scaled * math.exp(x)

    log_value = math.log(i_scaled) + x
    if log_value >= _LOG_MAX:
        raise BesselOverflowError(
            f"I_{nu}({x}) overflows (log value {log_value:.1f}); use bessel_ik_scaled"
        )
    return math.exp(log_value)


def bessel_k(order: OrderLike, x: float) -> float:
    """
    Modified Bessel function of the second kind K_nu(x).

    Args:
        order: Order nu >= 0
        x: Argument, x > 0 (K_nu diverges at 0)

    Returns:
        K_nu(x); underflows to 0 for very large x

    Raises:
        DomainError: nu < 0 or x <= 0
        BesselOverflowError: K_nu(x) exceeds the float range (large nu, small x)
    """
    nu = as_order(order).nu
    x = _check_argument(x, allow_zero=False)

    k_scaled = float(special.kve(nu, x))
    if not math.isfinite(k_scaled):
        raise BesselOverflowError(f"K_{nu}({x}) overflows; use bessel_ik_scaled")

    if x <= 700.0:
        value = k_scaled * math.exp(-x)
    else:
        value = math.exp(math.log(k_scaled) - x)
    if not math.isfinite(value):
        raise BesselOverflowError(f"K_{nu}({x}) overflows; use bessel_ik_scaled")
    return value


def bessel_ik_scaled(order: OrderLike, x: float) -> ScaledPair:
    """
    Exponentially scaled pair (e^-x I_nu(x), e^x K_nu(x)).

    Raises:
        DomainError: nu < 0 or x <= 0
        BesselOverflowError: a scaled component under- or overflows
            (only for x -> 0+ at large order)
    """
    nu = as_order(order).nu
    x = _check_argument(x, allow_zero=False)

    i_scaled = float(special.ive(nu, x))
    k_scaled = float(special.kve(nu, x))
    if not (i_scaled > 0.0 and math.isfinite(k_scaled)):
        raise BesselOverflowError(
            f"scaled pair for nu={nu} not representable at x={x}"
        )
    return ScaledPair(i_scaled=i_scaled, k_scaled=k_scaled, x=x)


def bessel_i_prime(order: OrderLike, x: float) -> float:
    """dI_nu/dx from the recurrence I'_nu = I_{nu+1} + (nu/x) I_nu."""
    nu = as_order(order).nu
    x = _check_argument(x, allow_zero=False)
    return bessel_i(nu + 1.0, x) + (nu / x) * bessel_i(nu, x)


def bessel_k_prime(order: OrderLike, x: float) -> float:
    """dK_nu/dx from the recurrence K'_nu = -K_{nu+1} + (nu/x) K_nu."""
    nu = as_order(order).nu
    x = _check_argument(x, allow_zero=False)
    return -bessel_k(nu + 1.0, x) + (nu / x) * bessel_k(nu, x)


def scaled_ik_product(nu: float, a: ArrayLike, b: ArrayLike) -> Union[float, NDArray[np.float64]]:
    """
    I_nu(a) * K_nu(b) for 0 <= a, 0 < b, elementwise.

    Assembled as ive(a) * kve(b) * exp(a - b) so the exponential is applied
    once. Beyond the range of the scipy routines the scaled factors take
    their large-argument forms 1/sqrt(2 pi a) and sqrt(pi / (2 b)). Where
    the scaled pair is not representable and ab < nu^2 (order dominates)
    the leading limit (a/b)^nu / (2 nu) is used.
    """
    nu = as_order(nu).nu
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)

    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        i_scaled = special.ive(nu, a)
        k_scaled = special.kve(nu, b)
        i_scaled = np.where(
            ~np.isfinite(i_scaled) & (a > _LARGE_ARGUMENT), 1.0 / np.sqrt(2.0 * np.pi * a), i_scaled
        )
        k_scaled = np.where(
            ~np.isfinite(k_scaled) & (b > _LARGE_ARGUMENT), np.sqrt(np.pi / (2.0 * b)), k_scaled
        )
        product = i_scaled * k_scaled * np.exp(a - b)
        if nu > 0.0:
            limit = np.power(a / b, nu) / (2.0 * nu)
            product = np.where(np.isfinite(product) | (a * b >= nu * nu), product, limit)
        product = np.where(np.isinf(b), 0.0, product)

    return float(product) if product.ndim == 0 else product
