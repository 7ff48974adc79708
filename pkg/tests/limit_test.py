import math

from pytest import approx, raises

from plankcert.certify import limit_derivation_check, tile_strips
from plankcert.errors import PreconditionError
from plankcert.geom import Strip


def test_tile_strips():
    strips = tile_strips([0.5, 0.5, 1.0])
    assert [(s.offset_low, s.offset_high) for s in strips] == [
        (-1.0, -0.5),
        (-0.5, 0.0),
        (0.0, 1.0),
    ]
    last = tile_strips([1.5, 1.0], normal_angle=0.4)[-1]
    assert last.offset_high == 1.0
    assert last.normal_angle == 0.4


def test_chain_holds_and_bound_tends_to_two():
    table = limit_derivation_check([0.5, 0.5, 1.0], [8.0, 2.0, 4.0, 32.0])
    assert [row.R for row in table.rows] == [2.0, 4.0, 8.0, 32.0]
    assert table.monotone
    assert table.holds
    for row in table.rows:
        assert row.covered
        assert row.wedge_bound_violations == 0
        assert row.implied_bound == approx((2 * row.R - 2) / row.R)
        assert row.sum_widths == approx(2.0)
        assert row.width_bound >= row.wedge_angle_sum >= row.view_angle - 1e-12
        assert row.view_angle >= row.sine_bound
    assert table.rows[-1].implied_bound == approx(2 - 2 / 32)


def test_given_strips_are_clipped():
    strips = [Strip(0.3, -2.0, 0.1), Strip(0.3, 0.1, 2.0)]
    table = limit_derivation_check([], [3.0], strips=strips)
    [row] = table.rows
    assert row.sum_widths == approx(2.0)
    assert row.holds


def test_outer_radius_at_least_two():
    with raises(PreconditionError):
        limit_derivation_check([1.0, 1.0], [1.5])


def test_single_diameter_strip_at_equality():
    [row] = limit_derivation_check([2.0], [2.0]).rows
    # Both wedges have angle ε, so Σα = 2ε exactly
    assert row.wedge_angle_sum == approx(row.view_angle, abs=1e-9)
    assert row.view_angle == approx(math.pi / 3)
    assert row.holds


def test_implied_bound_approaches_two():
    table = limit_derivation_check([0.5] * 4, [2.0, 10.0, 100.0, 1000.0])
    implied = [row.implied_bound for row in table.rows]
    assert implied == approx([1.0, 1.8, 1.98, 1.998])
    assert table.monotone
    assert table.holds
    assert all(row.wedge_bound_violations == 0 for row in table.rows)
