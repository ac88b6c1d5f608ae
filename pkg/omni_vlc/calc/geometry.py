"""LED array and work plane geometry."""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from omni_vlc.errors import InvalidArgumentError
from omni_vlc.models import LedArray, RoomScenario

# Slack for floor(extent / spacing) when the extent is a multiple of the pitch.
_GRID_SLACK = 1e-9


class Point3(NamedTuple):
    """A point in room coordinates, meters."""

    x: float
    y: float
    z: float


@dataclass(frozen=True)
class SampleGrid:
    """Candidate user locations on the work plane.

    ``points`` is an ``(N_s, 3)`` array. Regular grids are ordered x-major
    (all y values for the first x, then the next x) and record their
    ``shape`` as ``(n_x, n_y)``; random placements have no spacing or shape.
    """

    points: np.ndarray
    spacing: float | None = None
    shape: tuple[int, int] | None = None

    def __len__(self) -> int:
        return int(self.points.shape[0])

    @property
    def n_points(self) -> int:
        """Number of sample locations N_s."""
        return len(self)


def raw_led_coordinates(array: LedArray) -> np.ndarray:
    """LED x-y coordinates before centering, shape ``(M_t, 2)``.

    LED ``i`` (zero-based) sits at ``(floor(i / M_y) d_x, (i mod M_y) d_y)``,
    so the first LED is at the origin and indexing is row-major.
    """
    index = np.arange(array.m_t)
    x = (index // array.m_y) * array.d_x
    y = (index % array.m_y) * array.d_y
    return np.column_stack([x, y]).astype(float)


def led_positions(array: LedArray, room: RoomScenario) -> np.ndarray:
    """LED positions on the ceiling, centered on the room, shape ``(M_t, 3)``."""
    xy = raw_led_coordinates(array)
    offset_x = room.width / 2 - (array.m_x - 1) * array.d_x / 2
    offset_y = room.length / 2 - (array.m_y - 1) * array.d_y / 2
    z = np.full(array.m_t, room.ceiling_height)
    return np.column_stack([xy[:, 0] + offset_x, xy[:, 1] + offset_y, z])


def sample_work_plane(room: RoomScenario, spacing: float) -> SampleGrid:
    """Sample the work plane on a uniform grid including both room edges.

    Args:
        room: Room scenario; points lie at ``z = work_plane_height``.
        spacing: Grid pitch in meters.

    Returns:
        SampleGrid with ``(floor(W/s)+1) * (floor(L/s)+1)`` points.

    Raises:
        InvalidArgumentError: If ``spacing`` is not positive.
    """
    if not spacing > 0:
        raise InvalidArgumentError(f"grid spacing must be positive, got {spacing}")

    n_x = math.floor(room.width / spacing + _GRID_SLACK) + 1
    n_y = math.floor(room.length / spacing + _GRID_SLACK) + 1
    xs = np.minimum(np.arange(n_x) * spacing, room.width)
    ys = np.minimum(np.arange(n_y) * spacing, room.length)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    z = np.full(gx.size, room.work_plane_height)
    points = np.column_stack([gx.ravel(), gy.ravel(), z])
    return SampleGrid(points=points, spacing=spacing, shape=(n_x, n_y))


def random_user_points(
    room: RoomScenario, n_users: int, seed: int | np.random.Generator
) -> SampleGrid:
    """Place ``n_users`` uniformly at random on the work plane."""
    if n_users < 1:
        raise InvalidArgumentError(f"n_users must be >= 1, got {n_users}")
    rng = np.random.default_rng(seed)
    x = rng.uniform(0.0, room.width, n_users)
    y = rng.uniform(0.0, room.length, n_users)
    z = np.full(n_users, room.work_plane_height)
    return SampleGrid(points=np.column_stack([x, y, z]))
