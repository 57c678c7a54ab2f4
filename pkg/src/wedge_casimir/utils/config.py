"""Configuration management."""

import json
from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


DEFAULT_CONFIG_DIR = Path(__file__).resolve().parents[3] / "config"


class Settings(BaseSettings):
    """Application settings loaded from environment and .env file."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Paths
    config_dir: Path = Field(default=DEFAULT_CONFIG_DIR, alias="WEDGE_CONFIG_DIR")

    # Debug
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="WARNING", alias="LOG_LEVEL")


class QuadratureConfig(BaseModel):
    abs_tol: float = Field(default=1e-14, gt=0.0)
    rel_tol: float = Field(default=1e-12, gt=0.0)
    max_level: int = Field(default=14, ge=2)
    evaluation_budget: int = Field(default=2**20, ge=1)


class ExtrapolationConfig(BaseModel):
    epsilon_start: float = Field(default=1.0 / 16.0, gt=0.0)
    points: int = Field(default=7, ge=2)
    default_tol: float = Field(default=1e-8, gt=0.0)


class ModeSumConfig(BaseModel):
    series_switch: float = Field(default=0.5, gt=0.0)
    bernoulli_terms: int = Field(default=20, ge=2)
    direct_min_epsilon: float = Field(default=1e-2, gt=0.0)
    direct_relative_cutoff: float = Field(default=1e-18, gt=0.0)


class GreenConfig(BaseModel):
    max_step_fraction: float = Field(default=0.1, gt=0.0, lt=1.0)


class CLIConfig(BaseModel):
    default_tol: float = Field(default=1e-8, gt=0.0)
    workers: int = Field(default=4, ge=1)
    pi_caveat_window: float = Field(default=1e-6, ge=0.0)


class NumericsConfig(BaseModel):
    """Validated contents of numerics.yaml."""

    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    extrapolation: ExtrapolationConfig = Field(default_factory=ExtrapolationConfig)
    mode_sum: ModeSumConfig = Field(default_factory=ModeSumConfig)
    greenfn: GreenConfig = Field(default_factory=GreenConfig)
    cli: CLIConfig = Field(default_factory=CLIConfig)


def load_yaml_config(config_name: str, config_dir: Path = DEFAULT_CONFIG_DIR) -> dict:
    """Load a YAML configuration file."""
    config_path = Path(config_dir) / f"{config_name}.yaml"

    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def get_settings() -> Settings:
    """Get application settings."""
    return Settings()


@lru_cache(maxsize=1)
def get_numerics_config() -> NumericsConfig:
    """
    Get numerical configuration.

    Falls back to built-in defaults (which mirror config/numerics.yaml)
    when the config directory is not shipped, e.g. in a wheel install.
    """
    try:
        raw = load_yaml_config("numerics", get_settings().config_dir)
    except FileNotFoundError:
        return NumericsConfig()
    return NumericsConfig.model_validate(raw)


def load_run_file(path: Path) -> dict:
    """
    Load a run configuration file (YAML or JSON).

    A JSON output document is accepted as well: its ``inputs`` object is
    the configuration that produced it.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    with open(path, "r", encoding="utf-8") as f:
        if path.suffix.lower() == ".json":
            data = json.load(f)
        else:
            try:
                data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ValueError(f"Invalid YAML in {path}: {e}") from e

    if not isinstance(data, dict):
        raise ValueError(f"Config file must hold a mapping: {path}")
    if isinstance(data.get("inputs"), dict):
        return dict(data["inputs"])
    return data
