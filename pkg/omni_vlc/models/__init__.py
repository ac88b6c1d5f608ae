"""Data models for omni-vlc."""

from omni_vlc.models.experiment import (
    SCHEMA_VERSION,
    ExperimentConfig,
    PowerMapConfig,
    SweepConfig,
)
from omni_vlc.models.link import BerConfig, NoiseModel
from omni_vlc.models.scenario import ChannelParams, LedArray, RoomScenario
from omni_vlc.models.solver import OptimizerConfig

__all__ = [
    "RoomScenario",
    "LedArray",
    "ChannelParams",
    "OptimizerConfig",
    "NoiseModel",
    "BerConfig",
    "ExperimentConfig",
    "SweepConfig",
    "PowerMapConfig",
    "SCHEMA_VERSION",
]
