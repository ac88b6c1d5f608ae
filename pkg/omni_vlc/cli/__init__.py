"""CLI for omni-vlc."""

from .main import main

__all__ = ["main"]
