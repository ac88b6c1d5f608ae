"""Tests for omni-vlc."""
