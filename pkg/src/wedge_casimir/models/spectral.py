"""Spectral data models: Bessel orders, scaled pairs and radial modes."""

import math
from pydantic import BaseModel, Field, model_validator


class BesselOrder(BaseModel):
    """Real, non-negative order of a modified Bessel function."""

    nu: float = Field(ge=0.0, allow_inf_nan=False, description="Dimensionless order")


class ScaledPair(BaseModel):
    """Overflow-safe representation of I_nu(x) and K_nu(x) at one argument."""

    i_scaled: float = Field(gt=0.0, description="exp(-x) * I_nu(x)")
    k_scaled: float = Field(gt=0.0, description="exp(x) * K_nu(x)")
    x: float = Field(gt=0.0, description="Argument")

    @property
    def product(self) -> float:
        """I_nu(x) * K_nu(x); the exponential scalings cancel."""
        return self.i_scaled * self.k_scaled


class SpectralMode(BaseModel):
    """One term of the angular mode sum after frequency rotation."""

    m: int = Field(ge=1, description="Angular mode index")
    nu: float = Field(ge=0.0, allow_inf_nan=False, description="Order m*pi/beta")
    lambda_e: float = Field(
        gt=0.0,
        allow_inf_nan=False,
        description="Euclidean radial momentum sqrt(omega^2/c^2 + k^2)"
    )

    @classmethod
    def from_geometry(cls, m: int, beta: float, lambda_e: float) -> "SpectralMode":
        """Build the mode whose order is fixed by the wedge angle."""
        return cls(m=m, nu=m * math.pi / beta, lambda_e=lambda_e)


class RadialKernel(BaseModel):
    """Radial kernel arguments ordered as (smaller, greater) radius."""

    mode: SpectralMode
    rho_lt: float = Field(gt=0.0, description="Smaller radius")
    rho_gt: float = Field(gt=0.0, description="Greater radius")

    @model_validator(mode="after")
    def _ordered(self) -> "RadialKernel":
        if self.rho_lt > self.rho_gt:
            raise ValueError("rho_lt must not exceed rho_gt")
        return self

    @classmethod
    def between(cls, mode: SpectralMode, rho: float, rho_prime: float) -> "RadialKernel":
        return cls(mode=mode, rho_lt=min(rho, rho_prime), rho_gt=max(rho, rho_prime))
