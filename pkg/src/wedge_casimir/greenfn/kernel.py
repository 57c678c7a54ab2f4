r"""Euclidean radial Green kernel of the Dirichlet wedge and its structural checks.

After frequency rotation each angular mode sin(m pi phi / beta) carries the
radial kernel

.. math::
    g_\nu(\rho, \rho') = I_\nu(\lambda' \rho_<) K_\nu(\lambda' \rho_>)

which solves g'' + g'/rho - (lambda'^2 + nu^2/rho^2) g = -(1/rho') delta(rho - rho').
The checks below use finite differences only, so they stay independent of
the derivative recurrences in specfun.
"""

import logging
import math
import warnings

from ..errors import CoincidenceWarning, DomainError, StepSizeError
from ..models import RadialKernel, SpectralMode, WedgeGeometry
from ..models.geometry import TWO_PI
from ..specfun import scaled_ik_product
from ..utils import get_numerics_config


logger = logging.getLogger(__name__)


def _check_radius(name: str, value: float) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0.0):
        raise DomainError(name, f"must be finite and > 0, got {value!r}")
    return value


def _sin_pi(t: float) -> float:
    """sin(pi t), exactly zero at integer t."""
    r = math.fmod(t, 2.0)
    if r == round(r):
        return 0.0
    return math.sin(math.pi * r)


def radial_green(mode: SpectralMode, rho: float, rho_prime: float) -> float:
    """
    Radial kernel I_nu(lambda' rho_<) K_nu(lambda' rho_>).

    Symmetric in (rho, rho_prime) by construction.
    """
    rho = _check_radius("rho", rho)
    rho_prime = _check_radius("rho_prime", rho_prime)
    kernel = RadialKernel.between(mode, rho, rho_prime)
    lam = mode.lambda_e
    return scaled_ik_product(mode.nu, lam * kernel.rho_lt, lam * kernel.rho_gt)


def _check_step(h: float, scale: float, name: str = "h") -> float:
    fraction = get_numerics_config().greenfn.max_step_fraction
    if not (math.isfinite(h) and 0.0 < h < fraction * scale):
        raise StepSizeError(name, f"step must satisfy 0 < h < {fraction} * {scale}, got {h!r}")
    return h


def jump_check(mode: SpectralMode, rho_prime: float, h: float) -> float:
    """
    One-sided estimate of d/drho g at rho'+ minus at rho'-.

    Tends to -1/rho' as h -> 0 (Wronskian of I and K), with O(h) error.
    """
    rho_prime = _check_radius("rho_prime", rho_prime)
    h = _check_step(h, rho_prime)

    g0 = radial_green(mode, rho_prime, rho_prime)
    right = (radial_green(mode, rho_prime + h, rho_prime) - g0) / h
    left = (g0 - radial_green(mode, rho_prime - h, rho_prime)) / h
    return right - left


def ode_residual(mode: SpectralMode, rho: float, rho_prime: float, h: float) -> float:
    """
    Centered-difference residual of g'' + g'/rho - (lambda'^2 + nu^2/rho^2) g.

    The stencil must stay on one side of the source point; the residual is
    O(h^2) there.
    """
    rho = _check_radius("rho", rho)
    rho_prime = _check_radius("rho_prime", rho_prime)
    h = _check_step(h, rho)
    if abs(rho - rho_prime) <= h:
        raise StepSizeError("h", "stencil straddles the source point rho'")

    g0 = radial_green(mode, rho, rho_prime)
    gp = radial_green(mode, rho + h, rho_prime)
    gm = radial_green(mode, rho - h, rho_prime)

    second = (gp - 2.0 * g0 + gm) / (h * h)
    first = (gp - gm) / (2.0 * h)
    return second + first / rho - (mode.lambda_e**2 + mode.nu**2 / rho**2) * g0


def angular_mode(m: int, beta: float, phi: float) -> float:
    """Dirichlet angular eigenfunction sin(m pi phi / beta)."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise DomainError("m", f"mode index must be an integer >= 1, got {m!r}")
    if not (math.isfinite(beta) and 0.0 < beta <= TWO_PI):
        raise DomainError("beta", f"must lie in (0, 2*pi], got {beta!r}")
    if not (math.isfinite(phi) and 0.0 <= phi <= beta):
        raise DomainError("phi", f"must lie in [0, beta], got {phi!r}")
    return _sin_pi(int(m) * (phi / beta))


def green_partial_sum(
    geom: WedgeGeometry,
    rho_prime: float,
    phi_prime: float,
    lambda_e: float,
    m_max: int,
) -> float:
    """
    Mode sum (2/beta) sum_{m<=m_max} sin(m pi phi/beta) sin(m pi phi'/beta) g_{m pi/beta}.

    Args:
        geom: Wedge angle plus field point (rho, phi); phi is required
        rho_prime: Source radius
        phi_prime: Source angle in [0, beta]
        lambda_e: Euclidean radial momentum > 0
        m_max: Number of modes kept

    Returns:
        Truncated sum, accumulated in fixed m order
    """
    if geom.phi is None:
        raise DomainError("phi", "green_partial_sum needs the field angle phi")
    if isinstance(m_max, bool) or int(m_max) != m_max or m_max < 1:
        raise DomainError("m_max", f"must be an integer >= 1, got {m_max!r}")
    rho_prime = _check_radius("rho_prime", rho_prime)
    lambda_e = _check_radius("lambda_e", lambda_e)

    if geom.rho == rho_prime and geom.phi == phi_prime:
        message = "coincident points: mode sum diverges logarithmically in m_max"
        logger.warning("[WARN] %s", message)
        warnings.warn(message, CoincidenceWarning, stacklevel=2)

    total = 0.0
    for m in range(1, int(m_max) + 1):
        angular = angular_mode(m, geom.beta, geom.phi) * angular_mode(m, geom.beta, phi_prime)
        if angular == 0.0:
            continue
        mode = SpectralMode.from_geometry(m, geom.beta, lambda_e)
        total += angular * radial_green(mode, geom.rho, rho_prime)
    return 2.0 / geom.beta * total
