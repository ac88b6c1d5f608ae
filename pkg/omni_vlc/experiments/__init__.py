"""Experiment runners and result writers."""

from omni_vlc.experiments.results import ExperimentResult, write_result
from omni_vlc.experiments.runner import (
    run_ber,
    run_convergence,
    run_experiment,
    run_power_map,
    run_sweep,
)

__all__ = [
    "ExperimentResult",
    "write_result",
    "run_convergence",
    "run_sweep",
    "run_ber",
    "run_power_map",
    "run_experiment",
]
