"""Wedge geometry, point-splitting regulator and physical constants."""

import math
from typing import Optional

from pydantic import BaseModel, Field, ValidationError, model_validator
from scipy import constants

from ..errors import DomainError


TWO_PI = 2.0 * math.pi


class WedgeGeometry(BaseModel):
    """Evaluation point inside a wedge of opening angle beta."""

    beta: float = Field(
        gt=0.0,
        le=TWO_PI,
        allow_inf_nan=False,
        description="Opening angle in radians, (0, 2*pi]"
    )
    rho: float = Field(gt=0.0, allow_inf_nan=False, description="Radial distance")
    phi: Optional[float] = Field(
        default=None,
        ge=0.0,
        allow_inf_nan=False,
        description="Polar angle, 0 <= phi <= beta"
    )

    @model_validator(mode="after")
    def _phi_inside(self) -> "WedgeGeometry":
        if self.phi is not None and self.phi > self.beta:
            raise ValueError("phi must lie in [0, beta]")
        return self

    @property
    def p(self) -> float:
        """Order spacing pi/beta of the angular modes."""
        return math.pi / self.beta


class PointSplitting(BaseModel):
    """Radial point-split regulator: rho_lt = xi * rho with xi = exp(-epsilon)."""

    xi: float = Field(gt=0.0, lt=1.0, description="Split ratio")
    epsilon: float = Field(gt=0.0, allow_inf_nan=False, description="-ln(xi)")

    @model_validator(mode="after")
    def _consistent(self) -> "PointSplitting":
        if not math.isclose(self.xi, math.exp(-self.epsilon), rel_tol=1e-14):
            raise ValueError("xi must equal exp(-epsilon)")
        return self

    @classmethod
    def from_epsilon(cls, epsilon: float) -> "PointSplitting":
        return cls(xi=math.exp(-epsilon), epsilon=epsilon)

    @classmethod
    def from_xi(cls, xi: float) -> "PointSplitting":
        return cls(xi=xi, epsilon=-math.log(xi))


class PhysicalConstants(BaseModel):
    """Unit system applied at the output boundary."""

    hbar_c: float = Field(gt=0.0, description="hbar*c in output units (energy*length)")
    units: str = Field(default="natural", description="natural or si")

    @classmethod
    def natural(cls) -> "PhysicalConstants":
        return cls(hbar_c=1.0, units="natural")

    @classmethod
    def si(cls) -> "PhysicalConstants":
        """hbar*c in J*m from CODATA values."""
        return cls(hbar_c=constants.hbar * constants.c, units="si")


def validated(model: type[BaseModel], **values) -> BaseModel:
    """Build a model, reporting the first offending field as a DomainError."""
    try:
        return model(**values)
    except ValidationError as e:
        first = e.errors()[0]
        parameter = ".".join(str(part) for part in first["loc"]) or model.__name__
        raise DomainError(parameter, first["msg"]) from e
