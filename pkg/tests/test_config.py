"""
Configuration Tests
"""

import pytest
from pathlib import Path
import sys

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from core.config import (
    Config,
    ToleranceConfig,
    get_config,
    load_config,
    override_config,
    reload_config,
    resolve_tolerance,
)


EXAMPLE_CONFIG = Path(__file__).parent.parent / "config" / "config.example.yaml"


@pytest.fixture(autouse=True)
def fresh_config():
    reload_config()
    yield
    reload_config()


def test_load_example_config():
    """Test loading example configuration."""
    config = load_config(str(EXAMPLE_CONFIG))

    assert config is not None
    assert config.project_name == "Density State Geometry Toolkit"
    assert config.version == "1.0.0"


def test_config_has_required_sections():
    """Test that config has all required sections."""
    config = get_config()

    assert hasattr(config, 'tolerances')
    assert hasattr(config, 'output')
    assert hasattr(config, 'sampling')
    assert hasattr(config, 'basis')
    assert hasattr(config, 'contour')


def test_default_tolerances():
    """Built-in tolerances match the documented defaults."""
    tolerances = Config().tolerances

    assert tolerances.algebraic == 1e-12
    assert tolerances.positivity == 1e-9
    assert tolerances.degeneracy == 1e-8
    assert tolerances.unitarity == 1e-10
    assert tolerances.contour == 1e-3
    assert tolerances.algebraic < tolerances.positivity < tolerances.degeneracy


def test_output_defaults():
    output = Config().output

    assert output.format == "json"
    assert output.log_base == "nats"
    assert output.json_digits == 12
    assert output.csv_digits == 6


def test_tolerances_must_be_positive():
    with pytest.raises(ValueError):
        ToleranceConfig(positivity=0.0)
    with pytest.raises(ValueError):
        ToleranceConfig(algebraic=-1e-12)


def test_missing_explicit_config_raises():
    with pytest.raises(FileNotFoundError):
        load_config("does/not/exist.yaml")


def test_yaml_sections_are_applied(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "project:\n"
        "  name: custom\n"
        "tolerances:\n"
        "  positivity: 1.0e-7\n"
        "output:\n"
        "  format: csv\n"
        "contour:\n"
        "  resolution: 50\n"
    )
    config = load_config(str(path))

    assert config.project_name == "custom"
    assert config.tolerances.positivity == 1e-7
    assert config.tolerances.algebraic == 1e-12, "unset tolerances keep their defaults"
    assert config.output.format == "csv"
    assert config.contour.resolution == 50


def test_environment_overlay(monkeypatch):
    monkeypatch.setenv("QGEOM_LOG_LEVEL", "DEBUG")
    config = Config()
    assert config.log_level == "DEBUG"


def test_override_config_installs_copy():
    config = override_config(positivity=1e-6, output_format="csv", log_base="bits", seed=7)

    assert get_config() is config
    assert config.tolerances.positivity == 1e-6
    assert config.tolerances.degeneracy == 1e-8
    assert config.output.format == "csv"
    assert config.output.log_base == "bits"
    assert config.sampling.seed == 7


def test_resolve_tolerance():
    assert resolve_tolerance("positivity") == get_config().tolerances.positivity
    assert resolve_tolerance("positivity", 1e-4) == 1e-4
    with pytest.raises(ValueError):
        resolve_tolerance("positivity", 0.0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
