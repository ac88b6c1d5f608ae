"""Shared pytest fixtures for omni-vlc tests."""

from pathlib import Path

import numpy as np
import pytest

from omni_vlc.models import ChannelParams, LedArray, RoomScenario


@pytest.fixture
def fixtures_dir() -> Path:
    """Path to test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def room() -> RoomScenario:
    """5 x 6 x 3 m room with a 1 m work plane."""
    return RoomScenario(width=5.0, length=6.0, ceiling_height=3.0, work_plane_height=1.0)


@pytest.fixture
def array_3x3() -> LedArray:
    """3x3 array at 0.02 m pitch."""
    return LedArray(m_x=3, m_y=3, d_x=0.02, d_y=0.02)


@pytest.fixture
def unit_params() -> ChannelParams:
    """A_d = 1 m^2, m_l = 1, T = G = 1, 70 degree FOV."""
    return ChannelParams(pd_area=1.0, mode_number=1.0, fov_deg=70.0)


@pytest.fixture
def random_channel() -> np.ndarray:
    """Small non-negative 12 x 6 channel matrix."""
    return np.random.default_rng(1234).uniform(0.1, 1.0, size=(12, 6))


@pytest.fixture
def sample_config() -> dict:
    """Minimal convergence config as a dict."""
    return {
        "schema_version": 1,
        "kind": "convergence",
        "room": {"work_plane_height": 1.0},
        "array": {"m_x": 3, "m_y": 3, "d_x": 0.02, "d_y": 0.02},
        "optimizer": {"mu": 1e8, "epsilon": 1e-4},
        "q": 10,
        "grid_spacing": 0.5,
    }
