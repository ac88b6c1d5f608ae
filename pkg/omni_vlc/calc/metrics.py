"""Received-power and rate metrics."""

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from omni_vlc.calc.geometry import SampleGrid
from omni_vlc.calc.precoder import correlation_matrix, random_precoders
from omni_vlc.errors import InvalidArgumentError
from omni_vlc.models import NoiseModel

DEFAULT_BASELINE_DRAWS = 1000

# Random precoders evaluated per batch in classical_armp.
_DRAW_CHUNK = 1000


@dataclass(frozen=True)
class PowerMap:
    """Received mean power per sample point, in grid order."""

    points: np.ndarray
    power: np.ndarray
    armp: float
    rates: np.ndarray | None = None

    @property
    def mean_rate(self) -> float | None:
        """Average achievable rate over the points, if rates were computed."""
        if self.rates is None:
            return None
        return float(np.mean(self.rates))

    def to_csv(self, path: str | Path) -> None:
        """Write ``x,y,power[,rate]`` rows followed by ``# armp=<value>``."""
        header = ["x", "y", "power"] + (["rate"] if self.rates is not None else [])
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(header)
            for j, (x, y, _) in enumerate(self.points):
                row = [x, y, self.power[j]]
                if self.rates is not None:
                    row.append(self.rates[j])
                writer.writerow([format(float(v), ".17g") for v in row])
            f.write(f"# armp={format(self.armp, '.17g')}\n")


def _received_power(H: ArrayLike, P: ArrayLike) -> np.ndarray:
    effective = np.asarray(H, dtype=float) @ np.asarray(P, dtype=float)
    return np.sum(effective**2, axis=1)


def armp(H: ArrayLike, P: ArrayLike) -> float:
    """Average received mean power over the sample points, normalised by M_t."""
    gains = np.asarray(H, dtype=float)
    n_points, m_t = gains.shape
    return float(np.sum(_received_power(gains, P)) / (n_points * m_t))


def expected_classical_armp(H: ArrayLike) -> float:
    """ARMP of the random baseline in expectation, ``||H||_F^2 / (N_s M_t)``."""
    gains = np.asarray(H, dtype=float)
    return float(np.sum(gains**2) / gains.size)


def classical_armp(
    H: ArrayLike,
    q: int,
    n_draws: int = DEFAULT_BASELINE_DRAWS,
    seed: int | np.random.Generator | None = 0,
) -> float:
    """Mean ARMP over ``n_draws`` random row-normalised precoders.

    Draws come from one generator seeded with ``seed``, so the first draw
    equals ``random_precoder(M_t, q, seed)``.
    """
    if n_draws < 1:
        raise InvalidArgumentError(f"n_draws must be >= 1, got {n_draws}")
    gains = np.asarray(H, dtype=float)
    n_points, m_t = gains.shape
    R = correlation_matrix(gains)
    rng = np.random.default_rng(seed)

    total = 0.0
    remaining = n_draws
    while remaining:
        size = min(_DRAW_CHUNK, remaining)
        batch = random_precoders(m_t, q, size, rng)
        total += float(np.sum(batch * np.matmul(R, batch)))
        remaining -= size
    return total / (n_draws * n_points * m_t)


def achievable_rate(
    h: ArrayLike, P: ArrayLike, noise: NoiseModel, base: float = 2.0
) -> float:
    """Achievable rate ``log(1 + ||h^T P||^2 / delta^2)``, in bits by default."""
    effective = np.asarray(h, dtype=float) @ np.asarray(P, dtype=float)
    snr = float(np.sum(effective**2)) / noise.delta_sq
    return float(np.log1p(snr) / np.log(base))


def rate_map(
    H: ArrayLike, P: ArrayLike, noise: NoiseModel, base: float = 2.0
) -> np.ndarray:
    """Achievable rate at every sample point."""
    return np.log1p(_received_power(H, P) / noise.delta_sq) / np.log(base)


def power_map(
    H: ArrayLike,
    P: ArrayLike,
    grid: SampleGrid,
    noise: NoiseModel | None = None,
) -> PowerMap:
    """Per-point received mean power and its ARMP summary.

    When ``noise`` is given the map also carries per-point rates.
    """
    gains = np.asarray(H, dtype=float)
    if gains.shape[0] != len(grid):
        raise InvalidArgumentError(
            f"channel has {gains.shape[0]} rows but grid has {len(grid)} points"
        )
    power = _received_power(gains, P)
    rates = rate_map(gains, P, noise) if noise is not None else None
    return PowerMap(
        points=grid.points,
        power=power,
        armp=float(np.sum(power) / gains.size),
        rates=rates,
    )
