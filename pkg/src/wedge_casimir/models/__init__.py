"""Data models for the wedge Casimir pipeline."""

from .spectral import BesselOrder, ScaledPair, SpectralMode, RadialKernel
from .geometry import WedgeGeometry, PointSplitting, PhysicalConstants, validated
from .results import QuadratureResult, ExtrapolationTrace, StressResult, TorqueResult
from .checker import CheckResult, SuiteReport
from .run import RunConfig, Command, Units, OutputFormat, StressMethodChoice, Suite

__all__ = [
    "BesselOrder",
    "ScaledPair",
    "SpectralMode",
    "RadialKernel",
    "WedgeGeometry",
    "PointSplitting",
    "PhysicalConstants",
    "validated",
    "QuadratureResult",
    "ExtrapolationTrace",
    "StressResult",
    "TorqueResult",
    "CheckResult",
    "SuiteReport",
    "RunConfig",
    "Command",
    "Units",
    "OutputFormat",
    "StressMethodChoice",
    "Suite",
]
