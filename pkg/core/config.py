"""
Configuration Management Module

Loads and manages toolkit configuration from YAML files and environment variables.
All numeric tolerances live here so property tests have a single knob to turn.
"""

from pathlib import Path
from typing import Any, Dict, Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToleranceConfig(BaseModel):
    """Numeric tolerances shared by every package."""
    algebraic: float = 1e-12
    positivity: float = 1e-9
    degeneracy: float = 1e-8
    unitarity: float = 1e-10
    contour: float = 1e-3

    @field_validator("*")
    @classmethod
    def _strictly_positive(cls, value: float) -> float:
        if value <= 0:
            raise ValueError(f"tolerances must be positive, got {value}")
        return value


class OutputConfig(BaseModel):
    """Output formatting settings."""
    format: Literal["csv", "json"] = "json"
    log_base: Literal["nats", "bits"] = "nats"
    json_digits: int = Field(default=12, ge=1, le=17)
    csv_digits: int = Field(default=6, ge=1, le=17)


class SamplingConfig(BaseModel):
    """Random state sampling settings."""
    seed: int = 0


class BasisConfig(BaseModel):
    """Basis and structure constant settings."""
    max_structure_levels: int = Field(default=8, ge=2)


class ContourConfig(BaseModel):
    """Entropy surface and contour extraction settings."""
    resolution: int = Field(default=200, ge=2)


class Config(BaseSettings):
    """Main configuration class."""

    project_name: str = "Density State Geometry Toolkit"
    version: str = "1.0.0"
    environment: str = "development"
    log_level: str = "WARNING"

    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    basis: BasisConfig = Field(default_factory=BasisConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    contour: ContourConfig = Field(default_factory=ContourConfig)

    model_config = SettingsConfigDict(
        env_prefix="QGEOM_",
        env_nested_delimiter="__",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


DEFAULT_SEARCH_PATHS = (
    Path("config/config.yaml"),
    Path("config/config.yml"),
    Path("config.yaml"),
    Path("config/config.example.yaml"),
)


def _find_config_file(config_path: Optional[str]) -> Optional[Path]:
    if config_path:
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")
        return path

    for path in DEFAULT_SEARCH_PATHS:
        if path.exists():
            return path
    return None


def load_config(config_path: Optional[str] = None) -> Config:
    """
    Load configuration from YAML file and environment variables.

    Search order when no path is given: config/config.yaml, config/config.yml,
    config.yaml, config/config.example.yaml. When none exists the built-in
    defaults are used.

    Args:
        config_path: Optional path to config file.

    Returns:
        Config: Loaded configuration object

    Raises:
        FileNotFoundError: If an explicit config_path does not exist
        yaml.YAMLError: If configuration file is invalid
    """
    config_file = _find_config_file(config_path)
    if config_file is None:
        return Config()

    with open(config_file, "r") as f:
        yaml_config = yaml.safe_load(f) or {}

    config_dict: Dict[str, Any] = {}

    if "project" in yaml_config:
        project = yaml_config["project"]
        for key, target in (
            ("name", "project_name"),
            ("version", "version"),
            ("environment", "environment"),
            ("log_level", "log_level"),
        ):
            if project.get(key) is not None:
                config_dict[target] = project[key]

    if "tolerances" in yaml_config:
        config_dict["tolerances"] = ToleranceConfig(**yaml_config["tolerances"])

    if "output" in yaml_config:
        config_dict["output"] = OutputConfig(**yaml_config["output"])

    if "basis" in yaml_config:
        config_dict["basis"] = BasisConfig(**yaml_config["basis"])

    if "sampling" in yaml_config:
        config_dict["sampling"] = SamplingConfig(**yaml_config["sampling"])

    if "contour" in yaml_config:
        config_dict["contour"] = ContourConfig(**yaml_config["contour"])

    return Config(**config_dict)


# Global configuration instance
_config: Optional[Config] = None


def get_config() -> Config:
    """
    Get the global configuration instance.

    Returns:
        Config: Global configuration object
    """
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reload_config(config_path: Optional[str] = None) -> Config:
    """
    Reload configuration from file.

    Args:
        config_path: Optional path to config file

    Returns:
        Config: Newly loaded configuration object
    """
    global _config
    _config = load_config(config_path)
    return _config


def override_config(
    positivity: Optional[float] = None,
    degeneracy: Optional[float] = None,
    algebraic: Optional[float] = None,
    output_format: Optional[str] = None,
    log_base: Optional[str] = None,
    seed: Optional[int] = None,
) -> Config:
    """
    Install a copy of the global configuration with command-line overrides.

    Values left as None keep the loaded configuration. The result is validated
    the same way as a YAML-loaded configuration.
    """
    global _config
    base = get_config()

    tolerances = base.tolerances.model_dump()
    for key, value in (
        ("positivity", positivity),
        ("degeneracy", degeneracy),
        ("algebraic", algebraic),
    ):
        if value is not None:
            tolerances[key] = value

    output = base.output.model_dump()
    if output_format is not None:
        output["format"] = output_format
    if log_base is not None:
        output["log_base"] = log_base

    sampling = base.sampling.model_dump()
    if seed is not None:
        sampling["seed"] = seed

    _config = base.model_copy(update={
        "tolerances": ToleranceConfig(**tolerances),
        "output": OutputConfig(**output),
        "sampling": SamplingConfig(**sampling),
    })
    return _config


def resolve_tolerance(name: str, value: Optional[float] = None) -> float:
    """Return an explicit tolerance or the configured default for `name`."""
    if value is not None:
        if value <= 0:
            raise ValueError(f"tolerance '{name}' must be positive, got {value}")
        return value
    return getattr(get_config().tolerances, name)
