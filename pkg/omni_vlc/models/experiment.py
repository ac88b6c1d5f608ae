"""Experiment configuration models."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from omni_vlc.models.link import BerConfig
from omni_vlc.models.scenario import (
    ChannelParams,
    LedArray,
    RoomScenario,
    is_perfect_square,
)
from omni_vlc.models.solver import OptimizerConfig

SCHEMA_VERSION = 1

ExperimentKind = Literal[
    "convergence",
    "sweep_led_count",
    "sweep_spacing",
    "sweep_height",
    "ber",
    "power_map",
]

SWEEP_KINDS = ("sweep_led_count", "sweep_spacing", "sweep_height")


class SweepConfig(BaseModel):
    """Swept parameter values and the arrays each value is evaluated on."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    values: list[float] = Field(
        default_factory=list,
        description="LED counts, pitches (m) or work plane heights (m)",
    )
    led_counts: list[int] = Field(
        default_factory=list,
        description="Square array sizes to evaluate per value; empty uses `array`",
    )

    @field_validator("led_counts")
    @classmethod
    def validate_led_counts(cls, v: list[int]) -> list[int]:
        bad = [n for n in v if not is_perfect_square(n)]
        if bad:
            raise ValueError(f"LED counts {bad} are not perfect squares")
        return v


class PowerMapConfig(BaseModel):
    """Options for the power-map export."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    noise_delta_sq: float | None = Field(
        default=None, gt=0, description="Add a rate column for this noise variance"
    )


class ExperimentConfig(BaseModel):
    """Complete experiment description."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    schema_version: Literal[1] = Field(description="Config schema version")
    kind: ExperimentKind = Field(description="Experiment to run")
    room: RoomScenario = Field(description="Room and work plane")
    array: LedArray = Field(default_factory=LedArray, description="LED array")
    channel: ChannelParams = Field(
        default_factory=ChannelParams, description="Photometric constants"
    )
    optimizer: OptimizerConfig = Field(
        default_factory=OptimizerConfig, description="Precoder optimizer"
    )
    q: int = Field(default=10, ge=1, description="Number of symbol streams")
    grid_spacing: float = Field(
        default=0.1, gt=0, description="Work plane sampling pitch (m)"
    )
    sweep: SweepConfig = Field(
        default_factory=SweepConfig, description="Sweep definition"
    )
    baseline_draws: int = Field(
        default=1000, ge=1, description="Random precoders in the classical baseline"
    )
    ber: BerConfig = Field(default_factory=BerConfig, description="BER experiment")
    power_map: PowerMapConfig = Field(
        default_factory=PowerMapConfig, description="Power-map export"
    )
    seed: int = Field(default=0, ge=0, description="Master RNG seed")
    output: str | None = Field(default=None, description="Output CSV path")

    @model_validator(mode="after")
    def check_sweep(self) -> "ExperimentConfig":
        if self.kind in SWEEP_KINDS and not self.sweep.values:
            raise ValueError(f"sweep.values must be non-empty for kind '{self.kind}'")
        if self.kind == "sweep_height":
            too_high = [
                h for h in self.sweep.values if h >= self.room.ceiling_height or h < 0
            ]
            if too_high:
                raise ValueError(
                    f"sweep.values heights {too_high} must lie in "
                    f"[0, {self.room.ceiling_height})"
                )
        if self.kind == "sweep_spacing" and any(v < 0 for v in self.sweep.values):
            raise ValueError("sweep.values spacings must be non-negative")
        if self.kind == "sweep_led_count":
            for count in self.sweep.values:
                if not is_perfect_square(count):
                    raise ValueError(
                        f"sweep.values LED count {count} is not a perfect square"
                    )
            if self.sweep.led_counts:
                raise ValueError(
                    "sweep.led_counts is not used by kind 'sweep_led_count'; "
                    "list the counts in sweep.values"
                )
        return self

    def with_seed(self, seed: int) -> "ExperimentConfig":
        """Return a copy whose master seed is ``seed``."""
        return self.model_copy(update={"seed": seed})

    @property
    def optimizer_settings(self) -> OptimizerConfig:
        """Optimizer block seeded from the master seed."""
        return self.optimizer.model_copy(update={"seed": self.seed})

    @property
    def ber_settings(self) -> BerConfig:
        """BER block seeded from the master seed."""
        return self.ber.model_copy(update={"seed": self.seed})
