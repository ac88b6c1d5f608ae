"""Lambertian line-of-sight channel gains."""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from omni_vlc.calc.geometry import SampleGrid
from omni_vlc.errors import InvalidArgumentError
from omni_vlc.models import ChannelParams


@dataclass(frozen=True)
class LinkGeometry:
    """Distance and angles of one LED-to-photodiode path."""

    distance: float
    emission_angle: float
    incidence_angle: float


@dataclass(frozen=True)
class ChannelMatrix:
    """Gains between sample points (rows) and LEDs (columns)."""

    gains: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.gains, dtype=dtype)

    @property
    def n_points(self) -> int:
        return int(self.gains.shape[0])

    @property
    def n_leds(self) -> int:
        return int(self.gains.shape[1])


def lambertian_order(semi_angle_deg: float) -> float:
    """Mode number m_l of an LED with the given half-power semi-angle."""
    if not 0 < semi_angle_deg < 90:
        raise InvalidArgumentError(
            f"semi-angle must lie in (0, 90) degrees, got {semi_angle_deg}"
        )
    return -math.log(2) / math.log(math.cos(math.radians(semi_angle_deg)))


def mode_number(params: ChannelParams) -> float:
    """Lambertian mode number, derived from ``semi_angle_deg`` when given."""
    if params.semi_angle_deg is not None:
        return lambertian_order(params.semi_angle_deg)
    return params.mode_number


def link_geometry(led: ArrayLike, pd: ArrayLike) -> LinkGeometry:
    """Geometry of the path from a down-facing LED to an up-facing photodiode.

    Raises:
        InvalidArgumentError: If the points coincide or the LED is not above
            the photodiode.
    """
    led_xyz = np.asarray(led, dtype=float)
    pd_xyz = np.asarray(pd, dtype=float)
    offset = led_xyz - pd_xyz
    distance = float(np.linalg.norm(offset))
    if distance == 0.0:
        raise InvalidArgumentError("LED and photodiode positions coincide")
    if offset[2] <= 0:
        raise InvalidArgumentError("LED must be above the photodiode")

    # LED normal is (0, 0, -1), photodiode normal is (0, 0, 1).
    cos_emission = float(np.dot(offset, [0.0, 0.0, 1.0])) / distance
    cos_incidence = float(np.dot(-offset, [0.0, 0.0, -1.0])) / distance
    return LinkGeometry(
        distance=distance,
        emission_angle=math.acos(min(1.0, cos_emission)),
        incidence_angle=math.acos(min(1.0, cos_incidence)),
    )


def los_gain(geom: LinkGeometry, params: ChannelParams) -> float:
    """Lambertian LOS gain of one path; zero outside the receiver FOV."""
    if not 0.0 <= geom.incidence_angle <= params.fov_rad:
        return 0.0
    m_l = mode_number(params)
    return (
        params.pd_area
        * (m_l + 1)
        / (2 * math.pi * geom.distance**2)
        * math.cos(geom.emission_angle) ** m_l
        * math.cos(geom.incidence_angle)
        * params.filter_transmission
        * params.concentrator_gain
    )


def channel_matrix(
    leds: ArrayLike, grid: SampleGrid, params: ChannelParams
) -> ChannelMatrix:
    """Assemble the ``N_s x M_t`` gain matrix for a horizontal array and plane.

    Uses ``phi = theta`` with ``cos = dz / d``, which holds for a flat
    ceiling array facing a flat work plane.
    """
    led_xyz = np.atleast_2d(np.asarray(leds, dtype=float))
    pts = grid.points
    if led_xyz.shape[0] == 0 or len(grid) == 0:
        raise InvalidArgumentError("channel_matrix needs at least one LED and point")

    offset = led_xyz[np.newaxis, :, :] - pts[:, np.newaxis, :]
    distance = np.linalg.norm(offset, axis=2)
    dz = offset[:, :, 2]
    if np.any(dz <= 0):
        raise InvalidArgumentError("every LED must be above every sample point")

    cos_angle = np.minimum(dz / distance, 1.0)
    in_fov = np.arccos(cos_angle) <= params.fov_rad
    m_l = mode_number(params)
    scale = (
        params.pd_area
        * (m_l + 1)
        / (2 * math.pi)
        * params.filter_transmission
        * params.concentrator_gain
    )
    gains = scale * cos_angle ** (m_l + 1) / distance**2
    return ChannelMatrix(gains=np.where(in_fov, gains, 0.0))
