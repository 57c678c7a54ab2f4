"""
Test modified Bessel functions against mpmath and their identities.
"""

import math
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import mpmath
import numpy as np
import pytest

from wedge_casimir.errors import BesselOverflowError, DomainError
from wedge_casimir.models import BesselOrder
from wedge_casimir.specfun import (
    bessel_i,
    bessel_i_prime,
    bessel_ik_scaled,
    bessel_k,
    bessel_k_prime,
    scaled_ik_product,
)

mpmath.mp.dps = 30

ORDERS = [0.0, 0.5, 1.0, 1.7, math.pi, 10.0, 50.0]
ARGUMENTS = [0.1, 1.0, 2.0, 10.0, 100.0]


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


def test_reference_values():
    """Known values at x = 1."""
    print("\n" + "=" * 60)
    print("TEST: Reference Values")
    print("=" * 60)

    assert _rel(bessel_i(0, 1.0), 1.2660658777520084) <= 1e-14
    assert _rel(bessel_k(0, 1.0), 0.42102443824070834) <= 1e-14
    assert _rel(bessel_k(0.5, 1.0), 0.4610685044478946) <= 1e-14
    assert bessel_i(2.5, 0.0) == 0.0
    assert bessel_i(0.0, 0.0) == 1.0
    print("[PASS] I_0(1), K_0(1), K_1/2(1) and x = 0 limits")


def test_against_mpmath():
    """Both kinds over the order/argument grid, relative 1e-11."""
    worst = 0.0
    for nu in ORDERS:
        for x in ARGUMENTS:
            i_ref = float(mpmath.besseli(nu, x))
            k_ref = float(mpmath.besselk(nu, x))
            worst = max(worst, _rel(bessel_i(nu, x), i_ref), _rel(bessel_k(nu, x), k_ref))
    print(f"[INFO] worst relative deviation from mpmath: {worst:.2e}")
    assert worst <= 1e-11


def test_wronskian():
    """x (I K' - I' K) = -1 over the declared grid."""
    worst = 0.0
    for nu in ORDERS:
        for x in ARGUMENTS:
            w = x * (bessel_i(nu, x) * bessel_k_prime(nu, x) - bessel_i_prime(nu, x) * bessel_k(nu, x))
            worst = max(worst, abs(w + 1.0))
    print(f"[INFO] worst Wronskian defect: {worst:.2e}")
    assert worst <= 1e-10


def test_derivatives_against_mpmath():
    for nu, x in [(0.0, 1.0), (1.7, 2.0), (3.5, 0.3)]:
        assert _rel(bessel_i_prime(nu, x), float(mpmath.diff(lambda t: mpmath.besseli(nu, t), x))) <= 1e-12
        assert _rel(bessel_k_prime(nu, x), float(mpmath.diff(lambda t: mpmath.besselk(nu, t), x))) <= 1e-12


def test_half_order_closed_form():
    for x in ARGUMENTS:
        closed = math.sqrt(math.pi / (2.0 * x)) * math.exp(-x)
        assert _rel(bessel_k(0.5, x), closed) <= 1e-12


def test_scaled_pair():
    """Scaled product equals I*K; large and small argument limits."""
    pair = bessel_ik_scaled(BesselOrder(nu=0.0), 1.0)
    reference = float(mpmath.besseli(0, 1) * mpmath.besselk(0, 1))
    assert _rel(pair.product, reference) <= 1e-13
    assert pair.product == pytest.approx(0.533044674956269, rel=1e-12)

    far = bessel_ik_scaled(0.0, 700.0)
    assert math.isfinite(far.product)
    assert abs(far.product * 1400.0 - 1.0) <= 0.01

    # (x/2)^nu / Gamma(nu+1) * Gamma(nu) / 2 * (2/x)^nu -> 1 / (2 nu)
    near = bessel_ik_scaled(3.0, 1e-8)
    assert abs(near.product - 1.0 / 6.0) <= 1e-9
    print("[PASS] scaled pair at x = 1, 700 and 1e-8")


def test_unscaled_overflow_is_reported():
    with pytest.raises(BesselOverflowError):
        bessel_i(0.0, 800.0)
    pair = bessel_ik_scaled(0.0, 800.0)
    assert pair.i_scaled > 0.0 and pair.k_scaled > 0.0


def test_large_argument_k_underflows_to_zero():
    assert bessel_k(0.0, 800.0) == 0.0


def test_positivity_and_monotonicity():
    xs = np.linspace(0.05, 20.0, 200)
    for nu in [0.0, 0.5, 2.0, 7.3]:
        i_values = [bessel_i(nu, x) for x in xs]
        k_values = [bessel_k(nu, x) for x in xs]
        assert all(v > 0.0 for v in i_values + k_values)
        assert all(b > a for a, b in zip(i_values, i_values[1:]))
        assert all(b < a for a, b in zip(k_values, k_values[1:]))


def test_domain_errors():
    with pytest.raises(DomainError) as excinfo:
        bessel_i(-1.0, 1.0)
    assert excinfo.value.parameter == "nu"

    with pytest.raises(DomainError):
        bessel_i(0.0, -1.0)
    with pytest.raises(DomainError):
        bessel_k(0.0, 0.0)
    with pytest.raises(DomainError):
        bessel_k(float("nan"), 1.0)
    with pytest.raises(DomainError):
        bessel_ik_scaled(1.0, 0.0)


def test_scaled_ik_product():
    """Vectorized I_nu(a) K_nu(b) against unscaled evaluation and the a -> 0 limit."""
    a = np.array([0.3, 1.0, 5.0])
    b = np.array([1.0, 2.0, 6.0])
    product = scaled_ik_product(2.0, a, b)
    expected = [bessel_i(2.0, x) * bessel_k(2.0, y) for x, y in zip(a, b)]
    assert np.allclose(product, expected, rtol=1e-13, atol=0.0)

    assert isinstance(scaled_ik_product(1.0, 0.5, 1.0), float)

    # Far beyond overflow of the unscaled pieces
    assert math.isfinite(scaled_ik_product(0.0, 900.0, 901.0))

    # ive underflows for tiny a at large order; the limit takes over
    tiny = scaled_ik_product(40.0, 1e-12, 1e-11)
    assert tiny == pytest.approx(0.1**40 / 80.0, rel=1e-6)


def test_scaled_ik_product_beyond_scipy_range():
    """Arguments past the scipy routines decay instead of hitting the small-argument limit."""
    assert scaled_ik_product(1.0, 0.5e10, 1e10) == 0.0

    # a = b: I_nu(x) K_nu(x) -> 1 / (2x)
    equal = scaled_ik_product(1.0, 1e10, 1e10)
    assert equal == pytest.approx(0.5e-10, rel=1e-6)

    lam = np.geomspace(1.0, 1e12, 40)
    tail = lam * scaled_ik_product(2.0, 0.5 * lam, lam)
    assert np.all(np.isfinite(tail))
    assert tail[-1] == 0.0
    print("[PASS] I*K product decays past 1e9")


def main():
    """Run all tests."""
    print("\n" + "=" * 60)
    print("SPECIAL FUNCTION TESTS")
    print("=" * 60)

    tests = [
        test_reference_values,
        test_against_mpmath,
        test_wronskian,
        test_derivatives_against_mpmath,
        test_half_order_closed_form,
        test_scaled_pair,
        test_unscaled_overflow_is_reported,
        test_large_argument_k_underflows_to_zero,
        test_positivity_and_monotonicity,
        test_domain_errors,
        test_scaled_ik_product,
        test_scaled_ik_product_beyond_scipy_range,
    ]
    failed = 0
    for test in tests:
        try:
            test()
            print(f"[PASS] {test.__name__}")
        except AssertionError as e:
            failed += 1
            print(f"[FAIL] {test.__name__}: {e}")

    print("\n" + "=" * 60)
    print("[SUCCESS] ALL TESTS PASSED!" if failed == 0 else f"[ERROR] {failed} TEST(S) FAILED")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
