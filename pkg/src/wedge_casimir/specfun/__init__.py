"""Modified Bessel functions of real order."""

from .bessel import (
    as_order,
    bessel_i,
    bessel_k,
    bessel_ik_scaled,
    bessel_i_prime,
    bessel_k_prime,
    scaled_ik_product,
)

__all__ = [
    "as_order",
    "bessel_i",
    "bessel_k",
    "bessel_ik_scaled",
    "bessel_i_prime",
    "bessel_k_prime",
    "scaled_ik_product",
]
