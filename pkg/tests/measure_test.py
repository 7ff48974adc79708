import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from pytest import approx, mark, raises

from plankcert.errors import DomainRangeError
from plankcert.geom import (
    AngularDomain,
    AnnulusConfig,
    PointXY,
    RegularWedge,
    Strip,
    make_regular,
)
from plankcert.measure import (
    Method,
    RadialProfile,
    antiderivative_G,
    density,
    mu_centered_disc,
    mu_disc,
    mu_region,
    mu_regular,
    mu_wedge,
    radial_profile_integral,
)


def test_density_at_centre(config):
    # f(0) = (1/π)·(1/R²)·√((R² − r²)/r²)
    assert density(config, 0.0) == approx(math.sqrt(3) / (4 * math.pi))


def test_density_increasing(config):
    rhos = np.linspace(0.0, 0.999, 200)
    values = [density(config, rho) for rho in rhos]
    assert all(a < b for a, b in zip(values, values[1:]))
    assert all(v > 0 for v in values)


@mark.parametrize("rho", [1.0, 1.5, -0.1])
def test_density_domain(config, rho):
    with raises(DomainRangeError, match="rho"):
        density(config, rho)


@mark.parametrize("t", [-0.9, -0.3, 0.0, 0.4, 0.95])
def test_antiderivative_endpoints(config, t):
    assert antiderivative_G(config, abs(t), t) == approx(0.0, abs=1e-15)
    expected = 1 / math.sqrt(config.R**2 - t * t)
    assert antiderivative_G(config, config.r, t) == approx(expected, abs=1e-12)
    assert antiderivative_G(config, config.r * (1 - 1e-12), t) == approx(expected, abs=1e-5)


def test_antiderivative_domain(config):
    with raises(DomainRangeError, match="t="):
        antiderivative_G(config, 0.5, 1.0)
    with raises(DomainRangeError, match="rho"):
        antiderivative_G(config, 0.2, 0.5)


@mark.parametrize("t", [-0.95, -0.5, 0.0, 0.3, 0.9])
def test_radial_profile_integral(config, t):
    closed = radial_profile_integral(config, t)
    quad = radial_profile_integral(config, t, Method.QUADRATURE)
    assert closed.method is Method.CLOSED_FORM
    assert closed.error_estimate == 0.0
    assert quad.method is Method.QUADRATURE
    assert quad.value == approx(closed.value, abs=1e-8)


@mark.parametrize("alpha", [0.0, 0.1, 0.3, math.pi / 6, 0.9, 1.0])
@mark.parametrize("chirality", [1, -1])
def test_mu_regular_equals_angle(config, alpha, chirality):
    domain = make_regular(config, 0.4, chirality, alpha)
    closed = mu_regular(config, domain)
    quad = mu_regular(config, domain, Method.QUADRATURE)
    assert closed.value == approx(alpha, abs=1e-14)
    assert quad.value == approx(alpha, abs=1e-7)


def test_mu_regular_full_view(config):
    domain = make_regular(config, 0.0, 1, config.view_angle)
    assert mu_regular(config, domain).value == approx(config.view_angle)
    assert mu_regular(config, domain, Method.QUADRATURE).value == approx(
        config.view_angle, abs=1e-7
    )


def test_mu_regular_near_singular(config):
    alpha = config.view_angle - 1e-4
    domain = make_regular(config, 0.0, 1, alpha)
    assert mu_regular(config, domain, Method.QUADRATURE).value == approx(alpha, abs=1e-6)


@mark.parametrize("R", [1.01, 1.5, 3.0, 10.0, 100.0])
def test_mu_regular_other_radii(R):
    config = AnnulusConfig(1.0, R)
    alpha = 0.37 * config.view_angle
    domain = make_regular(config, 2.5, 1, alpha)
    assert mu_regular(config, domain, Method.QUADRATURE).value == approx(alpha, abs=1e-7)


def test_mu_wedge(config):
    outer = make_regular(config, 1.0, -1, 0.8)
    inner = make_regular(config, 1.0, -1, 0.25)
    wedge = RegularWedge(outer, inner)
    assert mu_wedge(config, wedge).value == approx(0.55)
    assert mu_wedge(config, wedge, Method.QUADRATURE).value == approx(0.55, abs=2e-7)
    assert mu_wedge(config, RegularWedge(outer), Method.QUADRATURE).value == approx(
        0.8, abs=1e-7
    )


def test_mu_region_of_regular_domain(config):
    domain = make_regular(config, 2.0, 1, 0.6)
    result = mu_region(config, RadialProfile.from_regular(domain))
    assert result.value == approx(0.6, abs=1e-7)


def test_mu_region_of_wedge(config):
    outer, inner = (make_regular(config, 2.0, 1, alpha) for alpha in (0.9, 0.2))
    wedge = RegularWedge(outer, inner)
    result = mu_region(config, RadialProfile.from_regular(wedge))
    assert result.value == approx(0.7, abs=1e-7)


def test_disc_measure(config):
    assert mu_disc(config) == approx(math.pi / 3)
    assert mu_region(config, RadialProfile.full()).value == approx(math.pi / 3, abs=1e-8)
    assert mu_region(config, RadialProfile.empty()).value == 0.0


@mark.parametrize("rho", [0.0, 0.2, 0.5, 0.9, 1.0])
def test_centered_disc(config, rho):
    closed = mu_centered_disc(config, rho).value
    quad = mu_centered_disc(config, rho, Method.QUADRATURE).value
    assert quad == approx(closed, abs=1e-8)
    if rho == 1.0:
        assert closed == approx(config.view_angle)


def test_centered_disc_domain(config):
    with raises(DomainRangeError):
        mu_centered_disc(config, 1.5)


def test_half_disc_has_half_measure(config):
    # A strip through the centre of full width cuts T into equal halves
    half = mu_region(config, RadialProfile.from_strip(Strip(0.3, 0.0, 5.0)))
    assert half.value == approx(config.view_angle / 2, abs=1e-8)


@settings(max_examples=25, deadline=None)
@given(
    vertex_angle=st.floats(0, 2 * math.pi),
    alpha=st.floats(0.05, 1.0),
    turn=st.floats(0, 2 * math.pi),
)
def test_rotation_invariance(config, vertex_angle, alpha, turn):
    domain = make_regular(config, vertex_angle, 1, alpha)
    base = mu_region(config, RadialProfile.from_regular(domain), radial_tol=1e-9).value
    rotated = mu_region(
        config, RadialProfile.from_regular(domain).rotated(turn), radial_tol=1e-9
    ).value
    assert rotated == approx(base, abs=1e-7)


def test_domain_partition_additivity(config):
    # Splitting a regular domain along an inner halfline splits its measure
    whole = make_regular(config, 0.0, -1, 0.9)
    part = make_regular(config, 0.0, -1, 0.35)
    rest = RegularWedge(whole, part)
    total = mu_region(config, RadialProfile.from_regular(whole)).value
    pieces = sum(
        mu_region(config, RadialProfile.from_regular(d)).value for d in (part, rest)
    )
    assert pieces == approx(total, abs=1e-7)


def test_domain_vertex_off_outer_circle(config):
    # Vertex on the inner circle: a proper part of T
    wedge = AngularDomain(PointXY(1.0, 0.0), math.pi - 0.2, 0.4)
    value = mu_region(config, RadialProfile.from_domain(wedge)).value
    assert 0 < value < config.view_angle


def test_breakpoints_within_rounding_of_knots(config):
    # Breakpoints a few ulps from r, from 0 and from each other are merged
    r = config.r
    profile = RadialProfile(
        RadialProfile.full().cross_section,
        breakpoints=(1e-14, 0.5, 0.5 + 1e-14, r - 2e-15, r - 1e-15),
    )
    result = mu_region(config, profile)
    assert result.value == approx(config.view_angle, abs=1e-8)


def test_tangent_supporting_line_breakpoint(config):
    # The tangent halfline of a regular domain sits within rounding of r
    domain = make_regular(config, 2.0, 1, 0.6)
    profile = RadialProfile.from_regular(domain)
    assert any(abs(b - config.r) < 1e-12 for b in profile.breakpoints)
    assert mu_region(config, profile).value == approx(0.6, abs=1e-7)


def _random_config(rng):
    r = rng.uniform(0.1, 10.0)
    return AnnulusConfig(r, rng.uniform(1.01 * r, 100.0))


@mark.slow
def test_mu_regular_random_configs():
    rng = np.random.default_rng(1)
    for _ in range(100):
        config = _random_config(rng)
        alpha = rng.uniform(0, config.view_angle)
        domain = make_regular(config, rng.uniform(0, 2 * math.pi), 1, alpha)
        t = config.R * math.sin(config.epsilon - alpha)
        tol = 1e-6 if config.r - abs(t) < 1e-3 * config.r else 1e-7
        assert mu_regular(config, domain).value == approx(alpha, abs=1e-12)
        quad = mu_regular(config, domain, Method.QUADRATURE).value
        assert quad == approx(alpha, abs=tol)


@mark.slow
def test_radial_profile_integral_random_configs():
    rng = np.random.default_rng(2)
    for _ in range(10):
        config = _random_config(rng)
        r = config.r
        for t in np.linspace(-0.95 * r, 0.95 * r, 50):
            closed = radial_profile_integral(config, float(t)).value
            quad = radial_profile_integral(config, float(t), Method.QUADRATURE).value
            assert quad == approx(closed, abs=1e-8)
        for t in (-0.999 * r, 0.999 * r):
            closed = radial_profile_integral(config, t).value
            quad = radial_profile_integral(config, t, Method.QUADRATURE).value
            assert quad == approx(closed, abs=1e-6)


@mark.slow
def test_disc_measure_random_configs():
    rng = np.random.default_rng(3)
    for _ in range(20):
        config = _random_config(rng)
        expected = 2 * math.asin(config.r / config.R)
        assert mu_disc(config) == approx(expected, abs=1e-12)
        full = mu_region(config, RadialProfile.full()).value
        assert full == approx(expected, abs=1e-8)
