"""Room, LED array and photometric channel models."""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from omni_vlc.errors import InvalidArgumentError


def is_perfect_square(count: float) -> bool:
    """True for 1, 4, 9, ...; non-integral values are rejected."""
    if not math.isfinite(count) or count != int(count) or count < 1:
        return False
    side = math.isqrt(int(count))
    return side * side == int(count)


class RoomScenario(BaseModel):
    """Room footprint, ceiling height and receiver work plane, in meters."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    width: float = Field(default=5.0, gt=0, description="Room x-extent")
    length: float = Field(default=6.0, gt=0, description="Room y-extent")
    ceiling_height: float = Field(
        default=3.0, gt=0, description="Ceiling height D of the LED array"
    )
    work_plane_height: float = Field(
        default=0.0, ge=0, description="Receiver plane height h above the floor"
    )

    @model_validator(mode="after")
    def check_work_plane_below_ceiling(self) -> "RoomScenario":
        if self.work_plane_height >= self.ceiling_height:
            raise ValueError(
                f"work_plane_height ({self.work_plane_height}) must be below "
                f"ceiling_height ({self.ceiling_height})"
            )
        return self

    @property
    def vertical_gap(self) -> float:
        """Distance between the ceiling and the work plane."""
        return self.ceiling_height - self.work_plane_height


class LedArray(BaseModel):
    """Uniform rectangular LED array mounted on the ceiling."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    m_x: int = Field(default=3, ge=1, description="LED count along x")
    m_y: int = Field(default=3, ge=1, description="LED count along y")
    d_x: float = Field(default=0.02, ge=0, description="LED pitch along x (m)")
    d_y: float = Field(default=0.02, ge=0, description="LED pitch along y (m)")

    @property
    def m_t(self) -> int:
        """Total number of LEDs."""
        return self.m_x * self.m_y

    @classmethod
    def square(
        cls, m_t: int, spacing: float, spacing_y: float | None = None
    ) -> "LedArray":
        """Build a square array holding ``m_t`` LEDs.

        ``spacing_y`` defaults to ``spacing``.

        Raises:
            InvalidArgumentError: If ``m_t`` is not a perfect square.
        """
        if not is_perfect_square(m_t):
            raise InvalidArgumentError(f"LED count {m_t} is not a perfect square")
        side = math.isqrt(m_t)
        d_y = spacing if spacing_y is None else spacing_y
        return cls(m_x=side, m_y=side, d_x=spacing, d_y=d_y)


class ChannelParams(BaseModel):
    """Photometric constants of the Lambertian line-of-sight model."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    pd_area: float = Field(default=1e-4, gt=0, description="Photodiode area A_d (m^2)")
    mode_number: float = Field(
        default=1.0, gt=0, description="Lambertian mode number m_l"
    )
    filter_transmission: float = Field(
        default=1.0, gt=0, le=1, description="Optical filter transmission T"
    )
    concentrator_gain: float = Field(
        default=1.0, gt=0, description="Optical concentrator gain G"
    )
    fov_deg: float = Field(
        default=70.0, gt=0, le=90, description="Receiver field-of-view half-angle"
    )
    semi_angle_deg: float | None = Field(
        default=None,
        gt=0,
        lt=90,
        description="LED half-power semi-angle; replaces mode_number when set",
    )

    @model_validator(mode="after")
    def check_single_beam_width(self) -> "ChannelParams":
        if self.semi_angle_deg is not None and "mode_number" in self.model_fields_set:
            raise ValueError("set either mode_number or semi_angle_deg, not both")
        return self

    @property
    def fov_rad(self) -> float:
        """Field-of-view half-angle psi_R in radians."""
        return math.radians(self.fov_deg)
