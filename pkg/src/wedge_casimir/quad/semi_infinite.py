"""Double-exponential quadrature over [0, inf) and the integral-formula oracle."""

import logging
import math
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import tanhsinh

from ..errors import DomainError, IntegrandError, QuadratureError
from ..models import QuadratureResult
from ..specfun import as_order, scaled_ik_product
from ..utils import get_numerics_config


logger = logging.getLogger(__name__)

Integrand = Callable[[NDArray[np.float64]], NDArray[np.float64]]

# tanhsinh exit status for a non-finite integrand value
_STATUS_NON_FINITE = -3


def integrate_semi_infinite(
    integrand: Integrand,
    abs_tol: Optional[float] = None,
    rel_tol: Optional[float] = None,
) -> QuadratureResult:
    """
    Integrate over [0, inf) with tanh-sinh refinement.

    The integrand is called with numpy arrays of abscissae and must
    evaluate elementwise. It should be finite on (0, inf) and decay at
    least like t^-2.

    Args:
        integrand: Vectorized real map
        abs_tol: Absolute tolerance (default from numerics.yaml)
        rel_tol: Relative tolerance (default from numerics.yaml)

    Returns:
        QuadratureResult with value, error bound and evaluation count

    Raises:
        DomainError: Non-positive tolerance
        IntegrandError: The integrand produced NaN or infinity
        QuadratureError: Tolerance not met within the evaluation budget
    """
    config = get_numerics_config().quadrature
    abs_tol = config.abs_tol if abs_tol is None else abs_tol
    rel_tol = config.rel_tol if rel_tol is None else rel_tol
    if not abs_tol > 0.0:
        raise DomainError("abs_tol", f"must be > 0, got {abs_tol!r}")
    if not rel_tol > 0.0:
        raise DomainError("rel_tol", f"must be > 0, got {rel_tol!r}")

    def f(t: NDArray[np.float64]) -> NDArray[np.float64]:
        values = np.asarray(integrand(t), dtype=float)
        return np.broadcast_to(values, np.shape(t)).copy()

    res = tanhsinh(f, 0.0, np.inf, atol=abs_tol, rtol=rel_tol, maxlevel=config.max_level)

    error = float(res.error)
    result = QuadratureResult(
        value=float(res.integral),
        error_estimate=abs(error) if math.isfinite(error) else math.inf,
        evaluations=max(int(res.nfev), 1),
    )

    status = int(res.status)
    if status == _STATUS_NON_FINITE:
        raise IntegrandError("integrand returned NaN or infinity", payload=result)
    if not bool(res.success) or result.evaluations > config.evaluation_budget:
        raise QuadratureError(
            f"no convergence: error estimate {result.error_estimate:.3e} "
            f"after {result.evaluations} evaluations (status {status})",
            payload=result,
        )

    logger.debug(
        "[QUAD] converged: value=%.17g error=%.2e evaluations=%d",
        result.value, result.error_estimate, result.evaluations
    )
    return result


def integral_formula_quadrature(nu: float, xi: float, rho: float) -> QuadratureResult:
    """
    Numerically integrate lambda * I_nu(lambda xi rho) * K_nu(lambda rho) over [0, inf).

    The Bessel product comes from scaled pairs, so the decay
    exp(-lambda rho (1 - xi)) is applied analytically.
    """
    nu = as_order(nu).nu
    if not 0.0 < xi < 1.0:
        raise DomainError("xi", f"must lie strictly inside (0, 1), got {xi!r}")
    if not (math.isfinite(rho) and rho > 0.0):
        raise DomainError("rho", f"must be finite and > 0, got {rho!r}")

    def integrand(lam: NDArray[np.float64]) -> NDArray[np.float64]:
        lam = np.asarray(lam, dtype=float)
        with np.errstate(invalid="ignore"):
            product = scaled_ik_product(nu, lam * (xi * rho), lam * rho)
            return np.where(lam > 0.0, lam * product, 0.0)

    return integrate_semi_infinite(integrand)


def verify_integral_formula(order, xi: float, rho: float) -> tuple[float, float]:
    """
    Compare the quadrature of the I*K integral with its closed form.

    Args:
        order: Order nu >= 0 (BesselOrder or float)
        xi: Split ratio, 0 < xi < 1
        rho: Radius > 0

    Returns:
        (lhs, rhs): numerical integral and xi^nu / (rho^2 (1 - xi^2))
    """
    nu = as_order(order).nu
    lhs = integral_formula_quadrature(nu, xi, rho).value
    rhs = xi**nu / (rho**2 * (1.0 - xi**2))
    return lhs, rhs
