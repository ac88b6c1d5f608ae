"""Main CLI entry point for omni-vlc."""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import NoReturn

import click

from omni_vlc import __version__
from omni_vlc.db.loader import bundled_configs, load_experiment_config
from omni_vlc.errors import ConfigError, OmniVlcError
from omni_vlc.experiments.results import ExperimentResult, write_result
from omni_vlc.experiments.runner import (
    run_ber,
    run_convergence,
    run_power_map,
    run_sweep,
)
from omni_vlc.models import ExperimentConfig
from omni_vlc.report.engine import ReportEngine


def resolve_config(config: str) -> Path:
    """Resolve a config argument to a file, accepting bundled scenario names."""
    path = Path(config)
    if path.exists():
        return path
    bundled = bundled_configs()
    if config in bundled:
        return bundled[config]
    raise FileNotFoundError(
        f"Config '{config}' is neither a file nor a bundled scenario "
        f"({', '.join(bundled)})"
    )


def fail(category: str, message: str, code: int = 1) -> NoReturn:
    """Report an error with its category and exit."""
    click.echo(f"Error [{category}]: {message}", err=True)
    raise SystemExit(code)


def execute(
    runner: Callable[[ExperimentConfig], ExperimentResult],
    config: str,
    out: str | None,
    seed: int | None,
    summary: str | None,
) -> None:
    """Load a config, run it and write all outputs."""
    try:
        cfg = load_experiment_config(resolve_config(config))
        if seed is not None:
            cfg = cfg.with_seed(seed)
        click.echo(f"Running {cfg.kind} (seed {cfg.seed})")
        result = runner(cfg)
        out_path = Path(out or cfg.output or f"{cfg.kind}.csv")
        written = write_result(result, out_path)
        if summary:
            Path(summary).write_text(ReportEngine().generate_summary(result))
            written.append(Path(summary))
    except FileNotFoundError as e:
        fail("io", str(e))
    except ConfigError as e:
        fail(e.category, str(e), code=2)
    except OmniVlcError as e:
        fail(e.category, str(e))

    click.echo(f"Wrote {len(written)} files:")
    for path in written:
        click.echo(f"  {path}")


def experiment_options(func):
    """Options shared by every experiment subcommand."""
    func = click.option(
        "--summary", default=None, help="Also write a markdown run summary"
    )(func)
    func = click.option(
        "--seed", type=click.IntRange(min=0), default=None, help="Override config seed"
    )(func)
    func = click.option("--out", "-o", default=None, help="Output CSV path")(func)
    func = click.option(
        "--config",
        "-c",
        required=True,
        help="Config file, or the name of a bundled scenario",
    )(func)
    return func


@click.group()
@click.version_option(version=__version__, prog_name="omni-vlc")
@click.option("--verbose", "-v", count=True, help="Log progress (-vv for debug)")
def main(verbose: int):
    """omni-vlc: Omnidirectional precoding for MIMO visible light communication."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format="%(levelname)s %(name)s: %(message)s",
        )


@main.command("list")
def list_cmd():
    """List bundled scenario configs."""
    click.echo("Bundled scenarios:")
    click.echo("-" * 70)
    for name, path in bundled_configs().items():
        cfg = load_experiment_config(path)
        click.echo(
            f"  {name}\n"
            f"    Kind: {cfg.kind}\n"
            f"    Array: {cfg.array.m_x} x {cfg.array.m_y}, "
            f"pitch {cfg.array.d_x} x {cfg.array.d_y} m\n"
            f"    Work plane: {cfg.room.work_plane_height} m"
        )
        click.echo()


@main.command()
@experiment_options
def convergence(config: str, out: str | None, seed: int | None, summary: str | None):
    """Trace the objective of the precoder design per iteration."""
    execute(run_convergence, config, out, seed, summary)


@main.command()
@experiment_options
def sweep(config: str, out: str | None, seed: int | None, summary: str | None):
    """Compare optimised and classical ARMP across a parameter sweep."""
    execute(run_sweep, config, out, seed, summary)


@main.command()
@experiment_options
def ber(config: str, out: str | None, seed: int | None, summary: str | None):
    """Simulate OOK bit error rate versus noise variance."""
    execute(run_ber, config, out, seed, summary)


@main.command("power-map")
@experiment_options
def power_map_cmd(config: str, out: str | None, seed: int | None, summary: str | None):
    """Export the received-power map of the optimised precoder."""
    execute(run_power_map, config, out, seed, summary)
