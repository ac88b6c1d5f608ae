"""Numerical core: geometry, channel, precoder design, metrics and link simulation."""

from omni_vlc.calc.channel import ChannelMatrix, channel_matrix
from omni_vlc.calc.geometry import SampleGrid, led_positions, sample_work_plane
from omni_vlc.calc.metrics import PowerMap, armp, classical_armp, power_map
from omni_vlc.calc.precoder import OptTrace, PrecodingMatrix, optimize

__all__ = [
    "SampleGrid",
    "led_positions",
    "sample_work_plane",
    "ChannelMatrix",
    "channel_matrix",
    "PrecodingMatrix",
    "OptTrace",
    "optimize",
    "PowerMap",
    "armp",
    "classical_armp",
    "power_map",
]
