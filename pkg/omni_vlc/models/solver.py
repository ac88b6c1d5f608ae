"""Precoder optimizer configuration."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class OptimizerConfig(BaseModel):
    """Projected-gradient settings for precoder design."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    mu: float = Field(default=1e8, gt=0, description="Gradient step size")
    epsilon: float = Field(
        default=1e-4, gt=0, description="Stopping threshold on objective change"
    )
    max_iter: int = Field(default=500, ge=1, description="Iteration cap")
    stop_mode: Literal["absolute", "relative"] = Field(
        default="relative",
        description="Compare the objective change to epsilon directly or scaled",
    )
    seed: int = Field(default=0, ge=0, description="Initialization RNG seed")
