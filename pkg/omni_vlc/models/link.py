"""Noise and link-simulation models."""

from pydantic import BaseModel, ConfigDict, Field, field_validator

# Ten log-spaced noise variances bracketing BER = 1e-3 for the
# 3x3 / 0.02 m / 1 m work plane scenario with default photometry.
DEFAULT_NOISE_SWEEP = [10.0 ** (-15 + 5 * k / 9) for k in range(10)]


class NoiseModel(BaseModel):
    """Additive white Gaussian receiver noise."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    delta_sq: float = Field(gt=0, description="Noise variance")

    @property
    def sigma(self) -> float:
        """Noise standard deviation."""
        return self.delta_sq**0.5


class BerConfig(BaseModel):
    """Monte Carlo OOK bit-error-rate experiment settings."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    n_users: int = Field(default=15, ge=1, description="Users placed on the plane")
    n_bits: int = Field(
        default=20_000, ge=1, description="Payload bits per user per noise point"
    )
    noise_sweep: list[float] = Field(
        default_factory=lambda: list(DEFAULT_NOISE_SWEEP),
        min_length=1,
        description="Noise variances to evaluate",
    )
    trials: int = Field(default=1, ge=1, description="Independent repetitions")
    seed: int = Field(default=0, ge=0, description="RNG seed")
    pilot_repeats: int = Field(
        default=1, ge=1, description="Pilot observations averaged per column"
    )
    known_channel: bool = Field(
        default=False, description="Detect with the true effective channel"
    )
    balance_streams: bool = Field(
        default=True,
        description="Rotate both precoders so received power spreads over columns",
    )

    @field_validator("noise_sweep")
    @classmethod
    def validate_noise_sweep(cls, v: list[float]) -> list[float]:
        bad = [x for x in v if not x > 0]
        if bad:
            raise ValueError(f"noise variances must be positive, got {bad}")
        return v
