"""Result models for quadrature, stress, torque and extrapolation."""

from typing import Literal, Optional
from pydantic import BaseModel, Field, model_validator

from .geometry import WedgeGeometry


StressMethod = Literal["closed_form", "series_extrapolated"]


class QuadratureResult(BaseModel):
    """Outcome of a semi-infinite quadrature."""

    value: float
    error_estimate: float = Field(ge=0.0, description="Bound on the achieved error")
    evaluations: int = Field(ge=1, description="Integrand evaluations used")


class ExtrapolationTrace(BaseModel):
    """Audit trail of the xi -> 1 limit."""

    epsilons: list[float] = Field(description="Regulator grid, strictly decreasing")
    values: list[float] = Field(description="Regulated sum at each epsilon")
    extrapolants: list[float] = Field(
        default_factory=list,
        description="Neville extrapolant to epsilon=0 using the first k+1 points"
    )
    extrapolant: float
    error_estimate: float = Field(ge=0.0)

    @model_validator(mode="after")
    def _shape(self) -> "ExtrapolationTrace":
        if not self.epsilons or len(self.epsilons) != len(self.values):
            raise ValueError("epsilons and values must be non-empty and equal length")
        if any(b >= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError("epsilons must be strictly decreasing")
        return self


class StressResult(BaseModel):
    """Renormalized <T^phiphi> in hbar*c / length^4."""

    value: float = Field(allow_inf_nan=False)
    error_estimate: float = Field(ge=0.0)
    method: StressMethod
    geometry: Optional[WedgeGeometry] = None


class TorqueResult(BaseModel):
    """Casimir torque density per unit height, hbar*c / (length^5 rad)."""

    value: float = Field(lt=0.0, allow_inf_nan=False, description="Negative: attraction")
    geometry: WedgeGeometry
    notes: list[str] = Field(default_factory=list, description="Metadata caveats")
