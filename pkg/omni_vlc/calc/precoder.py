"""Omnidirectional precoder design on the unit-row-norm manifold.

The design problem maximises the summed received power

    g(P) = sum_j h_j^T P P^T h_j = trace(P^T R P),   R = H^T H,

subject to every row of ``P`` having unit Euclidean norm, which gives every
LED the same mean transmit power. Each iteration takes an ascent step on
``g`` and projects back by normalising the rows.
"""

import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

from omni_vlc.errors import DegenerateRowError, InvalidArgumentError, NoSignalError
from omni_vlc.models import OptimizerConfig

logger = logging.getLogger(__name__)

# Floor for the relative stopping rule when the objective is exactly zero.
_TINY = np.finfo(float).tiny

# Exhaustive sign search grows as 2**M_t.
MAX_SIGN_SEARCH_LEDS = 20


@dataclass(frozen=True)
class PrecodingMatrix:
    """``M_t x q`` precoder whose rows have unit Euclidean norm."""

    values: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    @property
    def n_leds(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_streams(self) -> int:
        return int(self.values.shape[1])

    def row_norm_error(self) -> float:
        """Largest deviation of ``diag(P P^T)`` from one."""
        return float(np.max(np.abs(np.sum(self.values**2, axis=1) - 1.0)))

    def to_csv(self, path: str | Path) -> None:
        """Write one LED per line with 17 significant digits."""
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow([f"stream_{k + 1}" for k in range(self.n_streams)])
            for row in self.values:
                writer.writerow([format(float(v), ".17g") for v in row])

    @classmethod
    def from_csv(cls, path: str | Path) -> "PrecodingMatrix":
        """Read a matrix written by :meth:`to_csv`.

        The rows are taken as stored; call :func:`project_rows` to enforce
        the unit-norm constraint on externally produced data.
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Precoder file not found: {path}")
        with open(path, newline="") as f:
            rows = [row for row in csv.reader(f) if row and not row[0].startswith("#")]
        if rows and rows[0][0].startswith("stream_"):
            rows = rows[1:]
        return cls(values=np.array(rows, dtype=float))


@dataclass
class OptTrace:
    """Objective history of one optimizer run, including the initial value."""

    objective_history: list[float] = field(default_factory=list)
    iterations_run: int = 0
    converged: bool = False

    @property
    def final_objective(self) -> float:
        return self.objective_history[-1]


def correlation_matrix(H: ArrayLike) -> np.ndarray:
    """Channel correlation ``R = H^T H = sum_j h_j h_j^T``."""
    gains = np.asarray(H, dtype=float)
    R = gains.T @ gains
    return 0.5 * (R + R.T)


def objective(P: ArrayLike, R: ArrayLike) -> float:
    """Summed received power ``trace(P^T R P)``."""
    P = np.asarray(P, dtype=float)
    R = np.asarray(R, dtype=float)
    return float(np.sum(P * (R @ P)))


def gradient(P: ArrayLike, R: ArrayLike) -> np.ndarray:
    """Gradient of ``f = -g``, namely ``-2 R P``."""
    return -2.0 * (np.asarray(R, dtype=float) @ np.asarray(P, dtype=float))


def finite_difference_gradient(
    P: ArrayLike, R: ArrayLike, step: float = 1e-6
) -> np.ndarray:
    """Central-difference estimate of the gradient of ``f = -g``."""
    P = np.array(P, dtype=float)
    grad = np.zeros_like(P)
    for idx in np.ndindex(*P.shape):
        original = P[idx]
        P[idx] = original + step
        f_plus = -objective(P, R)
        P[idx] = original - step
        f_minus = -objective(P, R)
        P[idx] = original
        grad[idx] = (f_plus - f_minus) / (2 * step)
    return grad


def project_rows(P_raw: ArrayLike) -> PrecodingMatrix:
    """Project onto the constraint set by scaling every row to unit norm.

    Raises:
        DegenerateRowError: If any row is exactly zero.
    """
    P = np.asarray(P_raw, dtype=float)
    norms = np.linalg.norm(P, axis=1)
    zero_rows = np.flatnonzero(norms == 0.0)
    if zero_rows.size:
        raise DegenerateRowError(zero_rows.tolist())
    return PrecodingMatrix(values=P / norms[:, np.newaxis])


def random_precoder(
    m_t: int, q: int, seed: int | np.random.Generator | None
) -> PrecodingMatrix:
    """Gaussian matrix with normalised rows; deterministic for a fixed seed."""
    if m_t < 1 or q < 1:
        raise InvalidArgumentError(f"precoder shape must be positive, got {m_t}x{q}")
    rng = np.random.default_rng(seed)
    return project_rows(rng.standard_normal((m_t, q)))


def random_precoders(
    m_t: int, q: int, n_draws: int, seed: int | np.random.Generator | None
) -> np.ndarray:
    """``n_draws`` random precoders stacked as ``(n_draws, M_t, q)``.

    Draw ``k`` equals the ``k``-th successive :func:`random_precoder` call
    on a generator created from ``seed``.
    """
    if n_draws < 1:
        raise InvalidArgumentError(f"n_draws must be >= 1, got {n_draws}")
    if m_t < 1 or q < 1:
        raise InvalidArgumentError(f"precoder shape must be positive, got {m_t}x{q}")
    rng = np.random.default_rng(seed)
    raw = rng.standard_normal((n_draws, m_t, q))
    norms = np.linalg.norm(raw, axis=2, keepdims=True)
    if np.any(norms == 0.0):
        raise DegenerateRowError(np.argwhere(norms[..., 0] == 0.0)[:, 1].tolist())
    return raw / norms


def _converged(previous: float, current: float, cfg: OptimizerConfig) -> bool:
    change = abs(current - previous)
    if cfg.stop_mode == "absolute":
        return change < cfg.epsilon
    return change < cfg.epsilon * max(abs(previous), _TINY)


def optimize(
    H: ArrayLike, q: int, cfg: OptimizerConfig
) -> tuple[PrecodingMatrix, OptTrace]:
    """Design a precoder by projected-gradient ascent.

    Each iteration computes ``P + 2 mu R P`` (a step against the gradient of
    ``f = -g``) and normalises the rows. The run stops when the objective
    change meets ``cfg.stop_mode`` / ``cfg.epsilon`` or after
    ``cfg.max_iter`` updates.

    Args:
        H: ``N_s x M_t`` channel matrix.
        q: Number of symbol streams.
        cfg: Optimizer settings; ``cfg.seed`` selects the random start.

    Returns:
        The final precoder and the objective trace.

    Raises:
        NoSignalError: If ``H`` is identically zero.
        DegenerateRowError: If an update produces a zero row.
    """
    gains = np.asarray(H, dtype=float)
    if q < 1:
        raise InvalidArgumentError(f"q must be >= 1, got {q}")
    if not np.any(gains):
        raise NoSignalError("channel matrix is identically zero")

    R = correlation_matrix(gains)
    P = random_precoder(gains.shape[1], q, cfg.seed).values
    current = objective(P, R)
    trace = OptTrace(objective_history=[current])

    for k in range(1, cfg.max_iter + 1):
        P = project_rows(P - cfg.mu * gradient(P, R)).values
        previous, current = current, objective(P, R)
        trace.objective_history.append(current)
        trace.iterations_run = k
        logger.debug("iteration %d: objective %.17g", k, current)
        if _converged(previous, current, cfg):
            trace.converged = True
            break

    if trace.converged:
        logger.info(
            "converged after %d iterations, objective %.6g",
            trace.iterations_run,
            current,
        )
    else:
        logger.info("stopped at max_iter=%d without converging", cfg.max_iter)
    return PrecodingMatrix(values=P), trace


def coherent_bound(R: ArrayLike) -> float:
    """Objective of equal rows, ``1^T R 1``.

    For channels with non-negative gains this is the optimum over the
    constraint set, since ``|p_i^T p_k| <= 1`` and every ``R_ik >= 0``.
    """
    R = np.asarray(R, dtype=float)
    return float(np.sum(R))


def sign_search_optimum(R: ArrayLike) -> tuple[float, np.ndarray]:
    """Exhaustive optimum for ``q = 1``, where rows are exactly ``+1`` or ``-1``.

    Returns:
        Tuple of (best objective, best sign vector).
    """
    R = np.asarray(R, dtype=float)
    m_t = R.shape[0]
    if m_t > MAX_SIGN_SEARCH_LEDS:
        raise InvalidArgumentError(
            f"sign search limited to {MAX_SIGN_SEARCH_LEDS} LEDs, got {m_t}"
        )
    codes = np.arange(2**m_t)[:, np.newaxis]
    signs = ((codes >> np.arange(m_t)) & 1) * 2.0 - 1.0
    values = np.einsum("nm,mk,nk->n", signs, R, signs)
    best = int(np.argmax(values))
    return float(values[best]), signs[best]


def balance_streams(P: ArrayLike, H: ArrayLike) -> PrecodingMatrix:
    """Rotate ``P`` so its dominant received direction spreads over all streams.

    ``P`` is right-multiplied by the Householder reflection that maps the
    leading right singular vector of ``H P`` onto ``(1, ..., 1) / sqrt(q)``.
    Row norms, the objective and ARMP are unchanged.
    """
    P = np.asarray(P, dtype=float)
    effective = np.asarray(H, dtype=float) @ P
    q = P.shape[1]
    _, _, vt = np.linalg.svd(effective, full_matrices=False)
    lead = vt[0]
    if np.sum(effective @ lead) < 0:
        lead = -lead
    target = np.full(q, 1.0 / np.sqrt(q))
    w = lead - target
    w_norm_sq = float(w @ w)
    if w_norm_sq < 1e-24:
        return PrecodingMatrix(values=P.copy())
    reflection = np.eye(q) - 2.0 * np.outer(w, w) / w_norm_sq
    return PrecodingMatrix(values=P @ reflection)
