"""Experiment config loader.

Configs are YAML documents; JSON is valid YAML and loads unchanged.
"""

from pathlib import Path

import yaml
from pydantic import ValidationError

from omni_vlc.errors import ConfigError
from omni_vlc.models import ExperimentConfig


def get_bundled_data_dir() -> Path:
    """Get path to the bundled scenario directory."""
    return Path(__file__).parent / "data" / "scenarios"


def bundled_configs() -> dict[str, Path]:
    """Map bundled scenario names to their config files."""
    return {p.stem: p for p in sorted(get_bundled_data_dir().glob("*.yaml"))}


def _format_validation_error(error: ValidationError) -> str:
    parts = []
    for err in error.errors():
        loc = ".".join(str(p) for p in err["loc"]) or "<root>"
        parts.append(f"{loc}: {err['msg']}")
    return "; ".join(parts)


def parse_config(text: str) -> ExperimentConfig:
    """Parse and validate an experiment config document.

    Args:
        text: YAML or JSON document.

    Returns:
        Validated ExperimentConfig with defaults applied.

    Raises:
        ConfigError: On syntax errors (with line and column) or validation
            errors (with the dotted field path).
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        problem = getattr(e, "problem", None) or str(e)
        raise ConfigError(f"invalid config syntax{where}: {problem}") from e

    if not isinstance(data, dict):
        raise ConfigError("config document must be a mapping")

    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(_format_validation_error(e)) from e


def load_experiment_config(path: str | Path) -> ExperimentConfig:
    """Load an experiment config from a file.

    Raises:
        FileNotFoundError: If file does not exist.
        ConfigError: If the content is invalid.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Experiment config not found: {path}")

    return parse_config(path.read_text())
