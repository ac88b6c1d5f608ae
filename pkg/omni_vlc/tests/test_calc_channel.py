"""Tests for the Lambertian channel model."""

import math

import numpy as np
import pytest

from omni_vlc.calc.channel import (
    LinkGeometry,
    channel_matrix,
    lambertian_order,
    link_geometry,
    los_gain,
    mode_number,
)
from omni_vlc.calc.geometry import SampleGrid, led_positions, sample_work_plane
from omni_vlc.errors import InvalidArgumentError
from omni_vlc.models import ChannelParams, RoomScenario

# A_d = 1e-4, m_l = 1, d = 3 m straight below: 2e-4 / (2 pi 9).
GAIN_AT_3M = 2e-4 / (2 * math.pi * 9)


def grid_of(*points) -> SampleGrid:
    return SampleGrid(points=np.array(points, dtype=float))


class TestLinkGeometry:
    """Tests for link_geometry."""

    def test_coaxial(self):
        geom = link_geometry([0, 0, 3], [0, 0, 0])

        assert geom.distance == 3.0
        assert geom.emission_angle == 0.0
        assert geom.incidence_angle == 0.0

    def test_45_degrees(self):
        geom = link_geometry([0, 0, 3], [3, 0, 0])

        assert geom.distance == pytest.approx(3 * math.sqrt(2))
        assert math.cos(geom.emission_angle) == pytest.approx(1 / math.sqrt(2))
        assert math.cos(geom.incidence_angle) == pytest.approx(1 / math.sqrt(2))

    def test_xy_swap_symmetry(self):
        a = link_geometry([2.5, 2.5, 3], [1.0, 4.0, 0])
        b = link_geometry([2.5, 2.5, 3], [4.0, 1.0, 0])

        assert a == b

    def test_coincident_points(self):
        with pytest.raises(InvalidArgumentError, match="coincide"):
            link_geometry([1, 1, 1], [1, 1, 1])

    def test_led_below_receiver(self):
        with pytest.raises(InvalidArgumentError, match="above"):
            link_geometry([0, 0, 0], [0, 0, 1])


class TestLosGain:
    """Tests for los_gain."""

    def test_straight_below(self):
        geom = LinkGeometry(distance=3.0, emission_angle=0.0, incidence_angle=0.0)

        assert los_gain(geom, ChannelParams()) == pytest.approx(3.5368e-6, rel=1e-4)
        assert los_gain(geom, ChannelParams()) == pytest.approx(GAIN_AT_3M, rel=1e-12)

    def test_outside_fov_is_zero(self):
        params = ChannelParams()
        angle = params.fov_rad + 0.01
        geom = LinkGeometry(distance=3.0, emission_angle=angle, incidence_angle=angle)

        assert los_gain(geom, params) == 0.0

    def test_at_fov_edge_is_positive(self):
        params = ChannelParams()
        geom = LinkGeometry(
            distance=3.0, emission_angle=params.fov_rad, incidence_angle=params.fov_rad
        )

        assert los_gain(geom, params) > 0.0

    def test_inverse_square(self):
        params = ChannelParams()
        near = LinkGeometry(distance=2.0, emission_angle=0.3, incidence_angle=0.3)
        far = LinkGeometry(distance=4.0, emission_angle=0.3, incidence_angle=0.3)

        assert los_gain(far, params) == pytest.approx(los_gain(near, params) / 4)

    def test_non_increasing_in_incidence_angle(self):
        params = ChannelParams()
        gains = [
            los_gain(LinkGeometry(2.0, 0.2, theta), params)
            for theta in np.linspace(0.0, params.fov_rad, 20)
        ]

        assert all(a >= b for a, b in zip(gains, gains[1:], strict=False))

    def test_linear_in_photometric_constants(self):
        geom = LinkGeometry(distance=2.5, emission_angle=0.4, incidence_angle=0.4)
        base = los_gain(geom, ChannelParams())
        scaled = los_gain(
            geom,
            ChannelParams(pd_area=2e-4, filter_transmission=0.5, concentrator_gain=3.0),
        )

        assert scaled == pytest.approx(3.0 * base, rel=1e-12)


def test_lambertian_order_for_60_degrees():
    assert lambertian_order(60.0) == pytest.approx(1.0)


def test_lambertian_order_rejects_out_of_range():
    with pytest.raises(InvalidArgumentError):
        lambertian_order(90.0)


def test_mode_number_from_semi_angle():
    assert mode_number(ChannelParams(mode_number=2.0)) == 2.0
    assert mode_number(ChannelParams(semi_angle_deg=60.0)) == pytest.approx(1.0)
    assert mode_number(ChannelParams(semi_angle_deg=15.0)) == pytest.approx(
        lambertian_order(15.0)
    )


def test_semi_angle_drives_channel_gains(room, array_3x3):
    """A 60 degree semi-angle reproduces the m_l = 1 channel."""
    leds = led_positions(array_3x3, room)
    grid = sample_work_plane(room, 0.5)

    by_angle = channel_matrix(leds, grid, ChannelParams(semi_angle_deg=60.0))
    by_order = channel_matrix(leds, grid, ChannelParams(mode_number=1.0))
    narrow = channel_matrix(leds, grid, ChannelParams(semi_angle_deg=15.0))

    np.testing.assert_allclose(by_angle.gains, by_order.gains, rtol=1e-12)
    assert los_gain(
        link_geometry(leds[0], grid.points[0]), ChannelParams(semi_angle_deg=60.0)
    ) == pytest.approx(by_order.gains[0, 0], rel=1e-12)
    assert not np.allclose(narrow.gains, by_order.gains)


class TestChannelMatrix:
    """Tests for channel_matrix."""

    def test_single_link(self):
        H = channel_matrix([[0, 0, 3]], grid_of([0, 0, 0]), ChannelParams())

        assert H.gains.shape == (1, 1)
        assert H.gains[0, 0] == pytest.approx(3.5368e-6, rel=1e-4)

    def test_all_points_outside_fov(self):
        grid = grid_of([100, 0, 0], [0, 100, 0])
        H = channel_matrix([[0, 0, 3], [0.1, 0, 3]], grid, ChannelParams())

        assert np.all(H.gains == 0.0)

    def test_mirror_points_have_equal_rows(self):
        grid = grid_of([1.0, 0.0, 0.0], [-1.0, 0.0, 0.0])
        H = channel_matrix([[0, 0, 3]], grid, ChannelParams())

        assert H.gains[0, 0] == H.gains[1, 0]

    def test_matches_per_link_evaluation(self, room, array_3x3):
        """The vectorized matrix equals los_gain evaluated link by link."""
        params = ChannelParams(fov_deg=60.0, mode_number=1.5)
        leds = led_positions(array_3x3, room)
        grid = sample_work_plane(room, 0.5)

        H = channel_matrix(leds, grid, params)
        expected = np.array(
            [[los_gain(link_geometry(led, pt), params) for led in leds] for pt in grid.points]
        )

        assert (H.n_points, H.n_leds) == (len(grid), 9)
        np.testing.assert_allclose(H.gains, expected, rtol=1e-12, atol=0)

    def test_non_negative_with_fov_zeros(self, array_3x3):
        room = RoomScenario(work_plane_height=2.5)
        H = channel_matrix(
            led_positions(array_3x3, room), sample_work_plane(room, 0.25), ChannelParams()
        )

        assert np.all(H.gains >= 0)
        assert np.any(H.gains == 0)
        assert np.any(H.gains > 0)

    def test_scales_with_pd_area(self, room, array_3x3):
        leds = led_positions(array_3x3, room)
        grid = sample_work_plane(room, 1.0)

        base = channel_matrix(leds, grid, ChannelParams(pd_area=1e-4))
        scaled = channel_matrix(leds, grid, ChannelParams(pd_area=7e-4))

        np.testing.assert_allclose(scaled.gains, 7 * base.gains, rtol=1e-12)

    def test_array_protocol(self):
        H = channel_matrix([[0, 0, 3]], grid_of([0, 0, 0]), ChannelParams())

        assert np.asarray(H).shape == (1, 1)

    def test_led_below_point_rejected(self):
        with pytest.raises(InvalidArgumentError):
            channel_matrix([[0, 0, 1]], grid_of([0, 0, 2]), ChannelParams())
