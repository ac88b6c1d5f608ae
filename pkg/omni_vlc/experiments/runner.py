"""Config-driven experiment runners."""

import logging
from collections.abc import Callable

import numpy as np

from omni_vlc import __version__
from omni_vlc.calc.channel import channel_matrix
from omni_vlc.calc.geometry import (
    led_positions,
    random_user_points,
    sample_work_plane,
)
from omni_vlc.calc.link_sim import ber_experiment
from omni_vlc.calc.metrics import armp, classical_armp, power_map
from omni_vlc.calc.precoder import balance_streams, optimize, random_precoder
from omni_vlc.errors import ConfigError
from omni_vlc.experiments.results import ExperimentResult
from omni_vlc.models import ExperimentConfig, LedArray, NoiseModel, RoomScenario
from omni_vlc.models.experiment import SWEEP_KINDS

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = [
    "sweep_value",
    "m_t",
    "armp_proposed",
    "armp_classical",
    "iterations",
    "converged",
]


def _metadata(cfg: ExperimentConfig, **extra) -> dict:
    return {
        "tool": "omni-vlc",
        "version": __version__,
        "seed": cfg.seed,
        "config": cfg.model_dump(mode="json"),
        **extra,
    }


def _require_kind(cfg: ExperimentConfig, *kinds: str) -> None:
    if cfg.kind not in kinds:
        raise ConfigError(f"expected kind in {list(kinds)}, got '{cfg.kind}'")


def _grid_channel(cfg: ExperimentConfig, room: RoomScenario, array: LedArray):
    grid = sample_work_plane(room, cfg.grid_spacing)
    H = channel_matrix(led_positions(array, room), grid, cfg.channel)
    return grid, H


def run_convergence(cfg: ExperimentConfig) -> ExperimentResult:
    """Per-iteration objective trace of the precoder design."""
    _require_kind(cfg, "convergence")
    grid, H = _grid_channel(cfg, cfg.room, cfg.array)
    P, trace = optimize(H, cfg.q, cfg.optimizer_settings)

    scale = H.n_points * H.n_leds
    rows = [[k, g, g / scale] for k, g in enumerate(trace.objective_history)]
    return ExperimentResult(
        kind=cfg.kind,
        columns=["iteration", "objective", "armp"],
        rows=rows,
        metadata=_metadata(
            cfg,
            converged=trace.converged,
            iterations_run=trace.iterations_run,
            row_norm_error=P.row_norm_error(),
        ),
        precoder=P,
    )


def _sweep_points(cfg: ExperimentConfig) -> list[tuple[float, RoomScenario, LedArray]]:
    """Expand the sweep into (value, room, array) in configured order."""
    points = []
    for value in cfg.sweep.values:
        if cfg.kind == "sweep_led_count":
            side = round(value**0.5)
            array = cfg.array.model_copy(update={"m_x": side, "m_y": side})
            points.append((value, cfg.room, array))
            continue

        if cfg.sweep.led_counts:
            arrays = [
                LedArray.square(n, cfg.array.d_x, cfg.array.d_y)
                for n in cfg.sweep.led_counts
            ]
        else:
            arrays = [cfg.array]

        for array in arrays:
            if cfg.kind == "sweep_spacing":
                spaced = array.model_copy(update={"d_x": value, "d_y": value})
                points.append((value, cfg.room, spaced))
            else:
                room = RoomScenario(
                    **{**cfg.room.model_dump(), "work_plane_height": value}
                )
                points.append((value, room, array))
    return points


def run_sweep(cfg: ExperimentConfig) -> ExperimentResult:
    """Optimised and classical ARMP across LED count, pitch or plane height.

    Rows follow the configured value order; with several ``led_counts`` each
    value yields one row per array size, in the configured size order.
    """
    _require_kind(cfg, *SWEEP_KINDS)
    rows = []
    for value, room, array in _sweep_points(cfg):
        logger.info("%s: value=%g, M_t=%d", cfg.kind, value, array.m_t)
        _, H = _grid_channel(cfg, room, array)
        P, trace = optimize(H, cfg.q, cfg.optimizer_settings)
        baseline = classical_armp(H, cfg.q, cfg.baseline_draws, seed=cfg.seed)
        rows.append(
            [
                float(value),
                array.m_t,
                armp(H, P),
                baseline,
                trace.iterations_run,
                trace.converged,
            ]
        )
    return ExperimentResult(
        kind=cfg.kind,
        columns=list(SWEEP_COLUMNS),
        rows=rows,
        metadata=_metadata(cfg),
    )


def run_ber(cfg: ExperimentConfig) -> ExperimentResult:
    """BER of the optimised and a random precoder for randomly placed users."""
    _require_kind(cfg, "ber")
    ber_cfg = cfg.ber_settings
    leds = led_positions(cfg.array, cfg.room)
    _, H_grid = _grid_channel(cfg, cfg.room, cfg.array)

    proposed, trace = optimize(H_grid, cfg.q, cfg.optimizer_settings)
    classical = random_precoder(
        cfg.array.m_t, cfg.q, np.random.default_rng([cfg.seed, 1])
    )
    if ber_cfg.balance_streams:
        proposed = balance_streams(proposed, H_grid)
        classical = balance_streams(classical, H_grid)

    users = random_user_points(cfg.room, ber_cfg.n_users, cfg.seed)
    H_users = channel_matrix(leds, users, cfg.channel)
    result = ber_experiment(H_users, proposed, classical, ber_cfg)
    curve_p, curve_c = result

    rows = [
        [float(d), float(bp), float(bc)]
        for d, bp, bc in zip(
            ber_cfg.noise_sweep, curve_p.mean_ber, curve_c.mean_ber, strict=True
        )
    ]
    return ExperimentResult(
        kind=cfg.kind,
        columns=["delta_sq", "ber_proposed", "ber_classical"],
        rows=rows,
        metadata=_metadata(
            cfg,
            iterations_run=trace.iterations_run,
            uncovered_users_proposed=curve_p.uncovered_users,
            uncovered_users_classical=curve_c.uncovered_users,
        ),
        precoder=proposed,
        ber=result,
    )


def run_power_map(cfg: ExperimentConfig) -> ExperimentResult:
    """Received-power map of the optimised precoder over the work plane."""
    _require_kind(cfg, "power_map")
    grid, H = _grid_channel(cfg, cfg.room, cfg.array)
    P, trace = optimize(H, cfg.q, cfg.optimizer_settings)

    noise = None
    if cfg.power_map.noise_delta_sq is not None:
        noise = NoiseModel(delta_sq=cfg.power_map.noise_delta_sq)
    pmap = power_map(H, P, grid, noise)

    columns = ["x", "y", "power"]
    rows = [
        [float(x), float(y), float(p)]
        for (x, y, _), p in zip(grid.points, pmap.power, strict=True)
    ]
    if pmap.rates is not None:
        columns.append("rate")
        for row, rate in zip(rows, pmap.rates, strict=True):
            row.append(float(rate))
    return ExperimentResult(
        kind=cfg.kind,
        columns=columns,
        rows=rows,
        metadata=_metadata(
            cfg,
            armp=pmap.armp,
            mean_rate=pmap.mean_rate,
            rate_unit="bits" if noise is not None else None,
            iterations_run=trace.iterations_run,
        ),
        precoder=P,
        power_map=pmap,
    )


RUNNERS: dict[str, Callable[[ExperimentConfig], ExperimentResult]] = {
    "convergence": run_convergence,
    "sweep_led_count": run_sweep,
    "sweep_spacing": run_sweep,
    "sweep_height": run_sweep,
    "ber": run_ber,
    "power_map": run_power_map,
}


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    """Dispatch to the runner for ``cfg.kind``."""
    return RUNNERS[cfg.kind](cfg)
