import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises

from plankcert.coverage import cross_section
from plankcert.geom import (
    TAU,
    AngularDomain,
    AnnulusConfig,
    ArcIntervalSet,
    PointXY,
    Strip,
    make_regular,
    ray_circle_arc,
)


def _covers(arcs, angle, tol=1e-12):
    angle %= TAU
    return any(
        lo - tol <= a <= hi + tol
        for lo, hi in arcs.pieces
        for a in (angle, angle + TAU, angle - TAU)
    )


def test_arc_across_seam_is_one_circular_interval():
    arc = ArcIntervalSet.arc(6.0, 1.0)
    assert len(arc.pieces) == 2
    [joined] = arc.circular_intervals()
    assert joined.start == approx(6.0)
    assert joined.length == approx(1.0)
    assert _covers(arc, 0.5)
    assert _covers(arc, 6.1)
    assert not _covers(arc, 3.0)


def test_negative_length():
    with raises(ValueError):
        ArcIntervalSet.arc(0.0, -0.1)


def test_full_and_empty():
    assert ArcIntervalSet.arc(1.0, 7.0).is_full()
    assert ArcIntervalSet.full().total_length == approx(TAU)
    assert ArcIntervalSet.empty().is_empty
    [gap] = ArcIntervalSet.empty().gaps()
    assert gap.length == approx(TAU)


def test_halves_make_the_circle():
    upper = ArcIntervalSet.arc(0.0, math.pi)
    lower = ArcIntervalSet.arc(math.pi, math.pi)
    assert upper.union(lower).is_full()


def test_gap_reported_once_across_seam():
    [gap] = ArcIntervalSet.arc(1.0, 4.0).gaps()
    assert gap.start == approx(5.0)
    assert gap.length == approx(TAU - 4.0)
    assert gap.end == approx(1.0)


def test_gaps_below_tolerance_are_dropped():
    nearly = ArcIntervalSet.arc(0.0, math.pi).union(
        ArcIntervalSet.arc(math.pi + 1e-13, math.pi - 2e-13)
    )
    assert nearly.is_full()
    hairline = ArcIntervalSet.from_pieces([(0.0, 1.0), (1.0 + 1e-11, TAU)], tol=0.0)
    assert not hairline.is_full()
    assert hairline.is_full(tol=1e-9)


def test_intersection():
    overlap = ArcIntervalSet.arc(0.0, 2.0).intersection(ArcIntervalSet.arc(1.0, 2.0))
    assert overlap.isclose(ArcIntervalSet.arc(1.0, 1.0))
    apart = ArcIntervalSet.arc(0.0, 1.0).intersection(ArcIntervalSet.arc(2.0, 1.0))
    assert apart.is_empty


def test_intersection_across_seam():
    a = ArcIntervalSet.arc(5.5, 1.5)
    b = ArcIntervalSet.arc(6.0, 2.0)
    [common] = a.intersection(b).circular_intervals()
    assert common.start == approx(6.0)
    assert common.length == approx(5.5 + 1.5 - 6.0)


def test_rotated():
    [arc] = ArcIntervalSet.arc(0.0, 1.0).rotated(TAU - 0.5).circular_intervals()
    assert arc.start == approx(TAU - 0.5)
    assert arc.length == approx(1.0)
    assert ArcIntervalSet.full().rotated(1.0).is_full()


def test_ray_from_centre():
    hits = ray_circle_arc(PointXY(0.0, 0.0), 0.0, 1.0)
    assert _covers(hits, 0.0)
    assert hits.total_length == 0.0


def test_ray_through_circle():
    hits = ray_circle_arc(PointXY(2.0, 0.0), math.pi, 1.0)
    assert _covers(hits, 0.0)
    assert _covers(hits, math.pi)
    assert not _covers(hits, math.pi / 2)


def test_ray_away_from_circle():
    assert ray_circle_arc(PointXY(2.0, 0.0), 0.0, 1.0).is_empty


arcs = st.tuples(st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))


@settings(max_examples=200, deadline=None)
@given(first=arcs, second=arcs)
def test_union_length_bounds(first, second):
    a, b = ArcIntervalSet.arc(*first), ArcIntervalSet.arc(*second)
    union = a.union(b)
    assert union.isclose(b.union(a))
    assert union.total_length <= a.total_length + b.total_length + 1e-9
    assert union.total_length >= max(a.total_length, b.total_length) - 1e-9


@settings(max_examples=200, deadline=None)
@given(first=arcs, second=arcs)
def test_inclusion_exclusion(first, second):
    a, b = ArcIntervalSet.arc(*first), ArcIntervalSet.arc(*second)
    lhs = a.union(b).total_length + a.intersection(b).total_length
    assert lhs == approx(a.total_length + b.total_length, abs=1e-9)


def _random_shapes(rng, config):
    shapes = [
        make_regular(
            config,
            rng.uniform(0, TAU),
            int(rng.choice([-1, 1])),
            rng.uniform(0, config.view_angle),
        )
        for _ in range(3)
    ]
    for _ in range(2):
        vertex = PointXY.polar(rng.uniform(0, 2.0), rng.uniform(0, TAU))
        shapes.append(AngularDomain(vertex, rng.uniform(0, TAU), rng.uniform(0, math.pi)))
    for _ in range(2):
        low = rng.uniform(-1.0, 1.0)
        shapes.append(Strip(rng.uniform(0, TAU), low, low + rng.uniform(0, 0.5)))
    return shapes


@mark.slow
def test_union_of_cross_sections_matches_membership():
    # 1000 radii × 100 angles: the arc union at each radius against exact membership
    rng = np.random.default_rng(11)
    config = AnnulusConfig(1.0, 2.0)
    shapes = _random_shapes(rng, config)
    mismatches = 0
    for rho in rng.uniform(1e-3, 1.0, 1000):
        union = ArcIntervalSet.union_all(cross_section(s, rho) for s in shapes)
        for theta in rng.uniform(0, TAU, 100):
            p = PointXY.polar(rho, theta)
            if _covers(union, theta) != any(s.contains(p) for s in shapes):
                # Only angles within rounding of an arc endpoint may disagree
                near_end = any(
                    min(abs(theta - lo), abs(theta - hi)) < 1e-9
                    for lo, hi in union.pieces
                )
                mismatches += not near_end
    assert mismatches == 0
