"""Monte Carlo OOK link simulation with pilot-based channel estimation.

Symbol slot ``t`` is sent through precoder column ``t mod q``. A pilot
block of ``q`` unit symbols, one per column, lets each user estimate its
effective channel ``g = h^T P``. Payload bits are on-off keyed and detected
by the maximum-likelihood rule for Gaussian noise: decide 1 iff
``g_hat * r > g_hat**2 / 2``.

RNG streams use numpy's default bit generator (PCG64). Each
(user, noise point, trial) unit is seeded with ``[seed, user, noise, trial]``,
so results do not depend on evaluation order and both precoder arms see
the same pilot noise, bits and payload noise.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import erfc

from omni_vlc.errors import InvalidArgumentError, UncoverableUserError
from omni_vlc.models import BerConfig, NoiseModel

logger = logging.getLogger(__name__)

SeedLike = int | Sequence[int] | np.random.Generator | None


@dataclass(frozen=True)
class TransmitFrame:
    """Pilot block followed by an OOK payload."""

    q: int
    payload_bits: np.ndarray

    @property
    def pilot_symbols(self) -> np.ndarray:
        return np.ones(self.q)

    @property
    def column_schedule(self) -> np.ndarray:
        """Precoder column used by each payload slot."""
        return np.arange(self.payload_bits.size) % self.q


@dataclass
class BerResult:
    """BER per noise variance, averaged over covered users."""

    noise_sweep: list[float]
    mean_ber: np.ndarray
    per_user: np.ndarray
    uncovered_users: list[int] = field(default_factory=list)


def q_function(x: ArrayLike) -> np.ndarray:
    """Standard normal upper-tail probability."""
    return 0.5 * erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))


def analytic_ber(g: ArrayLike, noise: NoiseModel) -> float:
    """Known-channel OOK BER averaged over columns, ``mean Q(|g_t| / (2 delta))``."""
    g = np.asarray(g, dtype=float)
    return float(np.mean(q_function(np.abs(g) / (2.0 * noise.sigma))))


def build_frame(q: int, n_bits: int, rng: np.random.Generator) -> TransmitFrame:
    """Draw equiprobable payload bits for one frame."""
    return TransmitFrame(q=q, payload_bits=rng.integers(0, 2, n_bits))


def _pilot_estimate(
    g: np.ndarray, sigma: float, repeats: int, rng: np.random.Generator
) -> np.ndarray:
    observations = g + sigma * rng.standard_normal((repeats, g.size))
    return observations.mean(axis=0)


def estimate_effective_channel(
    h: ArrayLike,
    P: ArrayLike,
    noise: NoiseModel,
    seed: SeedLike,
    repeats: int = 1,
) -> np.ndarray:
    """Estimate ``h^T P`` from a pilot block of ``q`` unit symbols.

    Pilot slot ``t`` sends column ``t``; the observation ``g_t + n_t`` is the
    estimate. With ``repeats > 1`` the repeated observations are averaged.
    """
    if repeats < 1:
        raise InvalidArgumentError(f"repeats must be >= 1, got {repeats}")
    g = np.asarray(h, dtype=float) @ np.asarray(P, dtype=float)
    return _pilot_estimate(g, noise.sigma, repeats, np.random.default_rng(seed))


def simulate_ber(
    h: ArrayLike,
    P: ArrayLike,
    cfg: BerConfig,
    noise: NoiseModel,
    *,
    seed: SeedLike = None,
) -> float:
    """Bit error rate of one user.

    Args:
        h: Channel row of the user, length ``M_t``.
        P: Precoder, ``M_t x q``.
        cfg: Payload length, pilot repetition and detection mode.
        noise: Receiver noise.
        seed: RNG seed; defaults to ``cfg.seed``.

    Raises:
        UncoverableUserError: If the effective channel is identically zero.
    """
    g = np.asarray(h, dtype=float) @ np.asarray(P, dtype=float)
    if not np.any(g):
        raise UncoverableUserError("user receives no signal from any column")

    rng = np.random.default_rng(cfg.seed if seed is None else seed)
    sigma = noise.sigma
    # The pilot is always drawn so both detection modes share payload streams.
    g_hat = _pilot_estimate(g, sigma, cfg.pilot_repeats, rng)
    if cfg.known_channel:
        g_hat = g

    frame = build_frame(g.size, cfg.n_bits, rng)
    bits = frame.payload_bits
    columns = frame.column_schedule
    received = g[columns] * bits + sigma * rng.standard_normal(bits.size)
    reference = g_hat[columns]
    decided = (reference * received > reference**2 / 2).astype(bits.dtype)
    return float(np.mean(decided != bits))


def _run_arm(H: np.ndarray, P: np.ndarray, cfg: BerConfig) -> BerResult:
    n_noise, n_users = len(cfg.noise_sweep), H.shape[0]
    per_user = np.full((n_noise, n_users), np.nan)
    uncovered: list[int] = []

    for user in range(n_users):
        if not np.any(H[user] @ P):
            logger.warning("user %d is not covered by the precoder", user)
            uncovered.append(user)
            continue
        for k, delta_sq in enumerate(cfg.noise_sweep):
            noise = NoiseModel(delta_sq=delta_sq)
            trials = [
                simulate_ber(H[user], P, cfg, noise, seed=[cfg.seed, user, k, t])
                for t in range(cfg.trials)
            ]
            per_user[k, user] = float(np.mean(trials))

    covered = [u for u in range(n_users) if u not in uncovered]
    if covered:
        mean_ber = per_user[:, covered].mean(axis=1)
    else:
        mean_ber = np.full(n_noise, np.nan)
    return BerResult(
        noise_sweep=list(cfg.noise_sweep),
        mean_ber=mean_ber,
        per_user=per_user,
        uncovered_users=uncovered,
    )


def ber_experiment(
    H_users: ArrayLike,
    P_proposed: ArrayLike,
    P_classical: ArrayLike,
    cfg: BerConfig,
) -> tuple[BerResult, BerResult]:
    """BER curves of two precoders over the same users and noise sweep.

    Uncoverable users are logged, reported in ``uncovered_users`` and left
    out of the mean.

    Returns:
        Tuple of (proposed, classical) results.
    """
    H = np.atleast_2d(np.asarray(H_users, dtype=float))
    if H.shape[0] != cfg.n_users:
        raise InvalidArgumentError(
            f"expected {cfg.n_users} user channel rows, got {H.shape[0]}"
        )
    proposed = _run_arm(H, np.asarray(P_proposed, dtype=float), cfg)
    classical = _run_arm(H, np.asarray(P_classical, dtype=float), cfg)
    return proposed, classical
