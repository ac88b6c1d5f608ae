"""Tests for LED array and work plane geometry."""

import numpy as np
import pytest

from omni_vlc.calc.geometry import (
    led_positions,
    random_user_points,
    raw_led_coordinates,
    sample_work_plane,
)
from omni_vlc.errors import InvalidArgumentError
from omni_vlc.models import LedArray, RoomScenario


class TestRawLedCoordinates:
    """Tests for raw_led_coordinates."""

    def test_row_major_indexing(self, array_3x3):
        xy = raw_led_coordinates(array_3x3)

        assert xy.shape == (9, 2)
        assert tuple(xy[0]) == (0.0, 0.0)
        assert tuple(xy[1]) == (0.0, 0.02)
        assert tuple(xy[3]) == (0.02, 0.0)
        assert tuple(xy[8]) == (0.04, 0.04)

    def test_adjacent_offsets_are_exact(self):
        array = LedArray(m_x=4, m_y=3, d_x=0.013, d_y=0.007)
        xy = raw_led_coordinates(array)

        assert xy[array.m_y, 0] - xy[0, 0] == 0.013
        assert xy[1, 1] - xy[0, 1] == 0.007

    def test_line_array_has_zero_y(self):
        xy = raw_led_coordinates(LedArray(m_x=5, m_y=1, d_x=0.1, d_y=0.1))

        assert np.all(xy[:, 1] == 0.0)
        np.testing.assert_allclose(xy[:, 0], [0.0, 0.1, 0.2, 0.3, 0.4])


class TestLedPositions:
    """Tests for led_positions."""

    @pytest.mark.parametrize(
        "array",
        [
            LedArray(m_x=3, m_y=3, d_x=0.02, d_y=0.02),
            LedArray(m_x=8, m_y=8, d_x=0.5, d_y=0.5),
            LedArray(m_x=4, m_y=2, d_x=0.1, d_y=0.3),
            LedArray(m_x=1, m_y=1),
        ],
    )
    def test_centroid_at_ceiling_center(self, array):
        room = RoomScenario()
        leds = led_positions(array, room)

        np.testing.assert_allclose(leds.mean(axis=0), [2.5, 3.0, 3.0], atol=1e-12)

    def test_all_on_ceiling(self, array_3x3, room):
        leds = led_positions(array_3x3, room)

        assert leds.shape == (9, 3)
        assert np.all(leds[:, 2] == room.ceiling_height)

    def test_pure(self, array_3x3, room):
        """Identical inputs give bit-identical outputs."""
        np.testing.assert_array_equal(
            led_positions(array_3x3, room), led_positions(array_3x3, room)
        )


class TestSampleWorkPlane:
    """Tests for sample_work_plane."""

    def test_point_count(self):
        grid = sample_work_plane(RoomScenario(width=5.0, length=6.0), 0.1)

        assert grid.n_points == 51 * 61 == 3111
        assert grid.shape == (51, 61)

    def test_single_point_when_spacing_exceeds_room(self):
        grid = sample_work_plane(RoomScenario(), 10.0)

        assert len(grid) == 1
        np.testing.assert_array_equal(grid.points[0], [0.0, 0.0, 0.0])

    def test_points_on_work_plane(self, room):
        grid = sample_work_plane(room, 0.25)

        assert np.all(grid.points[:, 2] == room.work_plane_height)

    def test_includes_both_edges(self, room):
        grid = sample_work_plane(room, 0.5)

        assert grid.points[:, 0].min() == 0.0
        assert grid.points[:, 0].max() == room.width
        assert grid.points[:, 1].min() == 0.0
        assert grid.points[:, 1].max() == room.length

    def test_points_distinct_and_in_bounds(self, room):
        grid = sample_work_plane(room, 0.1)
        pts = grid.points

        assert len(np.unique(pts, axis=0)) == len(grid)
        assert np.all((pts[:, 0] >= 0) & (pts[:, 0] <= room.width))
        assert np.all((pts[:, 1] >= 0) & (pts[:, 1] <= room.length))

    def test_x_major_order(self, room):
        """All y values for the first x come first."""
        grid = sample_work_plane(room, 0.5)
        n_y = grid.shape[1]

        assert np.all(grid.points[:n_y, 0] == 0.0)
        assert grid.points[1, 1] == 0.5
        assert grid.points[n_y, 0] == 0.5

    @pytest.mark.parametrize("spacing", [0.0, -0.1])
    def test_non_positive_spacing(self, room, spacing):
        with pytest.raises(InvalidArgumentError):
            sample_work_plane(room, spacing)

    def test_invalid_argument_is_value_error(self, room):
        with pytest.raises(ValueError):
            sample_work_plane(room, 0.0)


class TestRandomUserPoints:
    """Tests for random_user_points."""

    def test_within_room(self, room):
        users = random_user_points(room, 200, seed=3)
        pts = users.points

        assert len(users) == 200
        assert np.all((pts[:, 0] >= 0) & (pts[:, 0] <= room.width))
        assert np.all((pts[:, 1] >= 0) & (pts[:, 1] <= room.length))
        assert np.all(pts[:, 2] == room.work_plane_height)
        assert users.spacing is None

    def test_deterministic(self, room):
        np.testing.assert_array_equal(
            random_user_points(room, 15, seed=0).points,
            random_user_points(room, 15, seed=0).points,
        )

    def test_rejects_zero_users(self, room):
        with pytest.raises(InvalidArgumentError):
            random_user_points(room, 0, seed=0)
