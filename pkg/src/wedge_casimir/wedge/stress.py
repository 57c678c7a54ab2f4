"""Renormalized phi-phi stress, Casimir torque density and the parallel-plate limit."""

import logging
import math
from typing import Optional

from ..errors import DomainError, ExtrapolationError
from ..models import (
    ExtrapolationTrace,
    PhysicalConstants,
    PointSplitting,
    StressResult,
    TorqueResult,
    WedgeGeometry,
    validated,
)
from ..utils import get_numerics_config
from .extrapolation import extrapolate_to_zero
from .mode_sum import regulated_sum


logger = logging.getLogger(__name__)

# T^phiphi * d^4 / (hbar c) as beta -> 0 with rho * beta = d
PARALLEL_PLATE_LIMIT = -math.pi**2 / 480.0


def epsilon_grid(p: float = 1.0) -> list[float]:
    """
    Decreasing regulator grid epsilon_k = epsilon_0 * 2^-k.

    epsilon_0 = min(epsilon_start, 1 / (2p)) keeps p * epsilon well inside
    the radius of convergence 2 pi of the small-argument series.
    """
    config = get_numerics_config().extrapolation
    start = min(config.epsilon_start, 0.5 / p)
    return [start * 2.0**-k for k in range(config.points)]


def tphiphi_renormalized(
    geom: WedgeGeometry,
    tol: Optional[float] = None,
) -> tuple[StressResult, ExtrapolationTrace]:
    """
    Renormalized <T^phiphi> from the regulated series, extrapolated to xi -> 1.

    Args:
        geom: Wedge angle and radius
        tol: Absolute tolerance on the extrapolation error estimate

    Returns:
        (StressResult in natural units, ExtrapolationTrace)

    Raises:
        ExtrapolationError: Successive extrapolants differ by more than tol
    """
    if tol is None:
        tol = get_numerics_config().extrapolation.default_tol
    if not tol > 0.0:
        raise DomainError("tol", f"must be > 0, got {tol!r}")

    epsilons = epsilon_grid(geom.p)
    values = [regulated_sum(geom, PointSplitting.from_epsilon(e)) for e in epsilons]
    trace = extrapolate_to_zero(epsilons, values)

    logger.debug(
        "[EXTRAPOLATE] beta=%.17g rho=%.17g -> %.17g (error %.2e over %d points)",
        geom.beta, geom.rho, trace.extrapolant, trace.error_estimate, len(epsilons)
    )

    if trace.error_estimate > tol:
        raise ExtrapolationError(
            f"extrapolants did not stabilize: error {trace.error_estimate:.3e} > tol {tol:.3e}",
            payload=trace,
        )

    result = StressResult(
        value=trace.extrapolant,
        error_estimate=trace.error_estimate,
        method="series_extrapolated",
        geometry=geom,
    )
    return result, trace


def _inverse_power(x: float, n: int, name: str) -> float:
    """x^-n, reported as a DomainError when it leaves the float range."""
    try:
        value = (1.0 / x) ** n
    except OverflowError as e:
        raise DomainError(name, f"{name}^-{n} overflows at {name}={x!r}") from e
    if value == 0.0:
        raise DomainError(name, f"{name}^-{n} underflows at {name}={x!r}")
    return value


def tphiphi_closed(
    geom: WedgeGeometry,
    consts: Optional[PhysicalConstants] = None,
) -> StressResult:
    """<T^phiphi>_ren = -(hbar c / 480 pi^2 rho^4) (pi^4/beta^4 - 1)."""
    consts = consts or PhysicalConstants.natural()
    p = geom.p
    value = -consts.hbar_c / (480.0 * math.pi**2) * _inverse_power(geom.rho, 4, "rho") * (p**4 - 1.0)
    if not math.isfinite(value):
        raise DomainError("rho", f"stress not representable at rho={geom.rho!r}")
    return StressResult(value=value, error_estimate=0.0, method="closed_form", geometry=geom)


def torque_density(
    geom: WedgeGeometry,
    consts: Optional[PhysicalConstants] = None,
) -> TorqueResult:
    """
    Casimir torque per unit height N = -(1/rho) d<T^phiphi>/dbeta = -pi^2 hbar c / (120 rho^5 beta^5).

    Evaluated at beta = pi as well; the result then carries a note, since
    the stress itself vanishes identically there.
    """
    consts = consts or PhysicalConstants.natural()
    value = -math.pi**2 * consts.hbar_c / 120.0 \
        * _inverse_power(geom.rho, 5, "rho") * _inverse_power(geom.beta, 5, "beta")
    if not (math.isfinite(value) and value < 0.0):
        raise DomainError("rho", f"torque density not representable at rho={geom.rho!r}")

    notes = []
    window = get_numerics_config().cli.pi_caveat_window
    if abs(geom.beta - math.pi) <= window:
        notes.append(
            "beta = pi: renormalized stress vanishes identically here; "
            "torque reported as the beta-derivative of the closed form"
        )
        logger.info("[WARN] torque evaluated at beta = pi (%.17g)", geom.beta)

    return TorqueResult(value=value, geometry=geom, notes=notes)


def parallel_plate_limit(d: float, beta: float) -> float:
    """
    T^phiphi * d^4 (hbar c units) on rho = d / beta.

    Tends to -pi^2/480 as beta -> 0; the correction is +beta^4 / (480 pi^2).
    """
    if not (math.isfinite(d) and d > 0.0):
        raise DomainError("d", f"plate separation must be finite and > 0, got {d!r}")
    if not (math.isfinite(beta) and beta > 0.0):
        raise DomainError("beta", f"must be finite and > 0, got {beta!r}")
    geom = validated(WedgeGeometry, beta=beta, rho=d / beta)
    return tphiphi_closed(geom).value * d**4
