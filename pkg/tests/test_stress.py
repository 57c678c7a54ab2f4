"""
Test renormalized stress, torque density and the parallel-plate limit.
"""

import math
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import pytest
from pydantic import ValidationError
from scipy import constants

from wedge_casimir.errors import DomainError, ExtrapolationError
from wedge_casimir.models import ExtrapolationTrace, PhysicalConstants, WedgeGeometry
from wedge_casimir.utils import get_numerics_config
from wedge_casimir.wedge import (
    PARALLEL_PLATE_LIMIT,
    epsilon_grid,
    parallel_plate_limit,
    tphiphi_closed,
    tphiphi_renormalized,
    torque_density,
)


ANGLES = [math.pi / 4, math.pi / 2, 2 * math.pi / 3, math.pi, 3 * math.pi / 2, 2 * math.pi]
RADII = [0.5, 1.0, 3.0]


def test_closed_form_values():
    print("\n" + "=" * 60)
    print("TEST: Closed Form")
    print("=" * 60)

    quarter = tphiphi_closed(WedgeGeometry(beta=math.pi / 2, rho=1.0))
    print(f"[INFO] beta=pi/2: {quarter.value!r}")
    assert quarter.value == pytest.approx(-15.0 / (480.0 * math.pi**2), rel=1e-14)
    assert quarter.value == pytest.approx(-3.1662869888e-3, rel=1e-8)
    assert quarter.method == "closed_form"
    assert quarter.error_estimate == 0.0

    assert tphiphi_closed(WedgeGeometry(beta=math.pi, rho=1.0)).value == 0.0

    full_turn = tphiphi_closed(WedgeGeometry(beta=2 * math.pi, rho=1.0)).value
    assert full_turn == pytest.approx(1.9789293680e-4, rel=1e-8)
    assert full_turn > 0.0


def test_si_presentation():
    geom = WedgeGeometry(beta=math.pi / 2, rho=1.0)
    si = tphiphi_closed(geom, PhysicalConstants.si()).value
    assert si == pytest.approx(tphiphi_closed(geom).value * constants.hbar * constants.c, rel=1e-14)


def test_epsilon_grid():
    grid = epsilon_grid()
    assert grid[0] == 1.0 / 16.0
    assert len(grid) == 7
    assert all(b == a / 2.0 for a, b in zip(grid, grid[1:]))

    # Narrow wedges start the grid at p * epsilon = 1/2
    assert epsilon_grid(4.0) == grid
    narrow = epsilon_grid(math.pi / 0.1)
    assert narrow[0] == pytest.approx(0.05 / math.pi, rel=1e-15)
    assert len(narrow) == 7


def test_renormalized_narrow_wedges():
    """Small opening angles still extrapolate to the closed form."""
    for beta in (0.3, 0.1, 0.05):
        geom = WedgeGeometry(beta=beta, rho=1.0)
        closed = tphiphi_closed(geom).value
        result, trace = tphiphi_renormalized(geom, 1e-9 * abs(closed))
        assert result.value == pytest.approx(closed, rel=1e-9), beta
        assert max(trace.epsilons) * geom.p <= 0.5 + 1e-12
        print(f"[INFO] beta={beta}: {result.value!r} vs {closed!r}")


def test_renormalized_matches_closed_form():
    """Series + extrapolation against the closed form over the angle/radius grid."""
    worst = 0.0
    for beta in ANGLES:
        for rho in RADII:
            geom = WedgeGeometry(beta=beta, rho=rho)
            result, trace = tphiphi_renormalized(geom, 1e-8)
            closed = tphiphi_closed(geom).value
            worst = max(worst, abs(result.value - closed) / max(1e-6, abs(closed)))
            assert isinstance(trace, ExtrapolationTrace)
            assert result.method == "series_extrapolated"
    print(f"[INFO] worst deviation from closed form: {worst:.2e}")
    assert worst <= 1e-7


def test_renormalized_spot_values():
    result, trace = tphiphi_renormalized(WedgeGeometry(beta=math.pi / 2, rho=1.0), 1e-8)
    assert abs(result.value - (-3.1662869888e-3)) <= 1e-8
    assert result.error_estimate <= 1e-8
    assert len(trace.extrapolants) == len(trace.epsilons) == len(trace.values)
    assert trace.extrapolant == trace.extrapolants[-1]

    half_plane, trace = tphiphi_renormalized(WedgeGeometry(beta=math.pi, rho=1.0))
    assert half_plane.value == 0.0
    assert all(v == 0.0 for v in trace.values)

    full_turn, _ = tphiphi_renormalized(WedgeGeometry(beta=2 * math.pi, rho=2.0), 1e-8)
    assert abs(full_turn.value - 1.2368475e-5) <= 1e-8


def test_unreachable_tolerance_carries_trace():
    """A two-point grid cannot reach 1e-8; the trace travels with the error."""
    config = get_numerics_config().extrapolation
    points = config.points
    config.points = 2
    try:
        with pytest.raises(ExtrapolationError) as excinfo:
            tphiphi_renormalized(WedgeGeometry(beta=math.pi / 2, rho=1.0), 1e-8)
    finally:
        config.points = points

    trace = excinfo.value.payload
    assert isinstance(trace, ExtrapolationTrace)
    assert len(trace.epsilons) == 2
    assert trace.error_estimate > 1e-8

    with pytest.raises(DomainError):
        tphiphi_renormalized(WedgeGeometry(beta=math.pi / 2, rho=1.0), 0.0)


def test_torque_values():
    quarter = torque_density(WedgeGeometry(beta=math.pi / 2, rho=1.0))
    assert quarter.value == pytest.approx(-32.0 / (120.0 * math.pi**3), rel=1e-14)
    assert quarter.value == pytest.approx(-8.6004093e-3, rel=1e-7)
    assert quarter.notes == []

    full_turn = torque_density(WedgeGeometry(beta=2 * math.pi, rho=1.0))
    assert full_turn.value == pytest.approx(-1.0 / (3840.0 * math.pi**3), rel=1e-14)

    doubled = torque_density(WedgeGeometry(beta=math.pi / 2, rho=2.0))
    assert doubled.value == pytest.approx(quarter.value / 32.0, rel=1e-15)


def test_torque_at_half_plane_is_flagged():
    near_pi = torque_density(WedgeGeometry(beta=3.1415927, rho=1.0))
    assert near_pi.value == pytest.approx(-1.0 / (120.0 * math.pi**3), rel=1e-6)
    assert len(near_pi.notes) == 1


def test_torque_is_angle_derivative_of_stress():
    """N = -(1/rho) dT/dbeta by centered differences, h = 1e-4."""
    h = 1e-4
    for beta in ANGLES[:-1]:
        for rho in RADII:
            upper = tphiphi_closed(WedgeGeometry(beta=beta + h, rho=rho)).value
            lower = tphiphi_closed(WedgeGeometry(beta=beta - h, rho=rho)).value
            finite_difference = -(upper - lower) / (2.0 * h) / rho
            analytic = torque_density(WedgeGeometry(beta=beta, rho=rho)).value
            assert finite_difference == pytest.approx(analytic, rel=1e-6), (beta, rho)


def test_scaling_laws():
    for beta in (math.pi / 4, 2 * math.pi / 3, 2 * math.pi):
        stress = [tphiphi_closed(WedgeGeometry(beta=beta, rho=rho)).value * rho**4 for rho in (0.1, 1.0, 10.0)]
        torque = [torque_density(WedgeGeometry(beta=beta, rho=rho)).value * rho**5 for rho in (0.1, 1.0, 10.0)]
        assert stress[0] == pytest.approx(stress[1], rel=1e-12)
        assert stress[2] == pytest.approx(stress[1], rel=1e-12)
        assert torque[0] == pytest.approx(torque[1], rel=1e-12)
        assert torque[2] == pytest.approx(torque[1], rel=1e-12)


def test_sign_structure():
    for beta in ANGLES:
        geom = WedgeGeometry(beta=beta, rho=1.0)
        stress = tphiphi_closed(geom).value
        if beta < math.pi:
            assert stress < 0.0
        elif beta > math.pi:
            assert stress > 0.0
        assert torque_density(geom).value < 0.0


def test_parallel_plate_limit():
    print("\n" + "=" * 60)
    print("TEST: Parallel-Plate Limit")
    print("=" * 60)

    beta = 1e-3
    value = parallel_plate_limit(1.0, beta)
    print(f"[INFO] beta=1e-3: {value!r} (limit {PARALLEL_PLATE_LIMIT!r})")
    assert value == pytest.approx(-math.pi**2 / 480.0 * (1.0 - beta**4 / math.pi**4), abs=1e-12)
    assert abs(value - (-2.0561676e-2)) <= 1e-9
    assert abs(value - PARALLEL_PLATE_LIMIT) <= 1e-11

    assert parallel_plate_limit(2.0, beta) == pytest.approx(value, abs=1e-12)

    values = [parallel_plate_limit(1.0, b) for b in (0.1, 0.05, 0.025)]
    steps = [abs(b - a) for a, b in zip(values, values[1:])]
    assert steps[1] / steps[0] == pytest.approx(1.0 / 16.0, rel=1e-3)


def test_domain_errors():
    with pytest.raises(DomainError):
        parallel_plate_limit(0.0, 0.1)
    with pytest.raises(DomainError):
        parallel_plate_limit(1.0, -0.1)
    with pytest.raises(ValidationError):
        WedgeGeometry(beta=7.0, rho=1.0)
    with pytest.raises(ValidationError):
        WedgeGeometry(beta=1.0, rho=0.0)
    with pytest.raises(ValidationError):
        WedgeGeometry(beta=1.0, rho=1.0, phi=1.5)


def test_extreme_radii_are_domain_errors():
    """Radii whose powers leave the float range are reported, not raised raw."""
    with pytest.raises(DomainError) as excinfo:
        torque_density(WedgeGeometry(beta=1.0, rho=1e65))
    assert excinfo.value.parameter == "rho"
    with pytest.raises(DomainError):
        torque_density(WedgeGeometry(beta=1.0, rho=1e-70))
    with pytest.raises(DomainError):
        tphiphi_closed(WedgeGeometry(beta=1.0, rho=1e-80))

    # Large but representable
    assert torque_density(WedgeGeometry(beta=1.0, rho=1e50)).value < 0.0


def main():
    """Run all tests."""
    print("\n" + "=" * 60)
    print("STRESS AND TORQUE TESTS")
    print("=" * 60)

    tests = [
        test_closed_form_values,
        test_si_presentation,
        test_epsilon_grid,
        test_renormalized_narrow_wedges,
        test_renormalized_matches_closed_form,
        test_renormalized_spot_values,
        test_unreachable_tolerance_carries_trace,
        test_torque_values,
        test_torque_at_half_plane_is_flagged,
        test_torque_is_angle_derivative_of_stress,
        test_scaling_laws,
        test_sign_structure,
        test_parallel_plate_limit,
        test_domain_errors,
        test_extreme_radii_are_domain_errors,
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
