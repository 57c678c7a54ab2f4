"""Command-line run configuration."""

from enum import Enum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class Command(str, Enum):
    STRESS = "stress"
    TORQUE = "torque"
    LIMIT_TABLE = "limit-table"
    GREEN = "green"
    VERIFY = "verify"


class Units(str, Enum):
    NATURAL = "natural"
    SI = "si"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class StressMethodChoice(str, Enum):
    CLOSED = "closed"
    SERIES = "series"


class Suite(str, Enum):
    ALL = "all"
    SPECFUN = "specfun"
    QUAD = "quad"
    WEDGE = "wedge"
    GREEN = "green"


class RunConfig(BaseModel):
    """
    Effective configuration of one CLI run.

    Domain constraints are checked by the models each command feeds;
    this model only fixes types and global ranges.
    """

    model_config = ConfigDict(extra="forbid", use_enum_values=True)

    command: Command

    # Geometry
    beta: Optional[float] = Field(default=None, description="Opening angle (rad)")
    rho: Optional[float] = Field(default=None, description="Radial distance")
    phi: Optional[float] = None
    phi_prime: Optional[float] = None
    rho_prime: Optional[float] = None
    lambda_e: Optional[float] = None
    m_max: Optional[int] = None

    # Parallel-plate sweep
    d: Optional[float] = None
    beta_start: Optional[float] = None
    beta_end: Optional[float] = None
    steps: Optional[int] = None

    method: StressMethodChoice = StressMethodChoice.CLOSED
    suite: Suite = Suite.ALL

    tol: float = Field(default=1e-8, gt=0.0)
    units: Units = Units.NATURAL
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[Path] = None

    def echo(self) -> dict:
        """Inputs as echoed in output documents (re-feedable as a config file)."""
        return self.model_dump(mode="json", exclude={"output_path"})
