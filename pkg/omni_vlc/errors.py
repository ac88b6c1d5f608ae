"""Exception hierarchy for omni-vlc.

Every error carries a machine-readable ``category`` that the CLI reports
alongside the message.
"""


class OmniVlcError(Exception):
    """Base class for all omni-vlc errors."""

    category = "error"


class InvalidArgumentError(OmniVlcError, ValueError):
    """An argument is outside its valid domain."""

    category = "invalid-argument"


class DegenerateRowError(OmniVlcError):
    """A precoder row has zero norm, so row projection is undefined."""

    category = "degenerate-row"

    def __init__(self, rows: list[int]):
        self.rows = rows
        super().__init__(f"Cannot project zero-norm row(s): {rows}")


class NoSignalError(OmniVlcError):
    """The channel matrix is identically zero."""

    category = "no-signal"


class UncoverableUserError(OmniVlcError):
    """A user receives no signal through any precoder column."""

    category = "uncoverable-user"


class ConfigError(OmniVlcError):
    """A configuration document failed to parse or validate."""

    category = "config"
