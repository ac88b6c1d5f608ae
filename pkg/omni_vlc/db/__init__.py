"""Config loading utilities."""

from omni_vlc.db.loader import bundled_configs, load_experiment_config, parse_config

__all__ = ["parse_config", "load_experiment_config", "bundled_configs"]
