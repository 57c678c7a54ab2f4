"""Exception hierarchy for the wedge Casimir pipeline."""

from typing import Optional

from pydantic import BaseModel


class WedgeCasimirError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(WedgeCasimirError, ValueError):
    """An input lies outside the domain of the operation."""

    def __init__(self, parameter: str, message: str):
        self.parameter = parameter
        super().__init__(f"{parameter}: {message}")


class StepSizeError(DomainError):
    """Finite-difference step too large for the requested stencil."""


class BesselOverflowError(WedgeCasimirError, OverflowError):
    """Unscaled Bessel value is not representable; use the scaled variant."""


class ConvergenceError(WedgeCasimirError, RuntimeError):
    """
    Numerical non-convergence.

    Carries the partial computation (a pydantic model) so the CLI can
    serialize it for post-mortem.
    """

    def __init__(self, message: str, payload: Optional[BaseModel] = None):
        self.payload = payload
        super().__init__(message)


class QuadratureError(ConvergenceError):
    """Quadrature error estimate did not fall below tolerance."""


class IntegrandError(ConvergenceError):
    """Integrand returned NaN or infinity."""


class ExtrapolationError(ConvergenceError):
    """Successive extrapolants did not stabilize below tolerance."""


class AccuracyLossError(ConvergenceError):
    """Regulated sum cannot be delivered at the requested accuracy."""


class CoincidenceWarning(UserWarning):
    """Mode sum evaluated at coincident points (logarithmically divergent)."""
