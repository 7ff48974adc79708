import math

import numpy as np
from pytest import approx, mark

from plankcert.certify import PLANK_BOUND, certify_angular, certify_plank
from plankcert.coverage import strip_to_regular_domains
from plankcert.geom import AngularDomain, PointXY, Strip, make_regular
from plankcert.measure import Method

STEPS = 64


def test_single_full_view_domain(config):
    cert = certify_angular(
        config, [make_regular(config, 0.5, 1, config.view_angle)], radial_steps=STEPS
    )
    assert cert.coverage.covered
    assert not cert.vacuous
    assert cert.inequality_holds
    assert cert.slack == approx(0.0, abs=1e-12)
    assert cert.mu_sum == approx(cert.mu_disc, abs=1e-7)
    assert cert.regularized_angles == [approx(config.view_angle, abs=1e-9)]
    assert cert.ratio_violations == []


def test_two_halves(config):
    eps = config.epsilon
    halves = [make_regular(config, 0.0, 1, eps), make_regular(config, math.pi, 1, eps)]
    cert = certify_angular(config, halves, radial_steps=STEPS)
    assert cert.coverage.covered and cert.inequality_holds
    assert cert.sum_angles == approx(config.view_angle)
    assert cert.mu_values == [approx(eps, abs=1e-7), approx(eps, abs=1e-7)]
    assert cert.chain_residual == approx(0.0, abs=1e-7)


def test_punctured_family_is_vacuous(config):
    eps = config.epsilon
    family = [
        make_regular(config, 0.0, 1, eps),
        make_regular(config, math.pi + 1e-3, 1, eps),
        make_regular(config, 0.0, -1, eps / 2),
    ]
    cert = certify_angular(config, family, radial_steps=STEPS)
    assert cert.vacuous
    assert cert.coverage.witness is not None
    # The angles still exceed 2ε: the verdict is not asserted without coverage
    assert cert.slack > 0


def test_general_domains_with_inner_vertices(config):
    # Wedges from vertices inside the annulus, each wide enough to hold T
    domains = []
    for k in range(3):
        vertex = PointXY.polar(1.5, k * 2 * math.pi / 3)
        domains.append(AngularDomain(vertex, vertex.angle + math.pi - 1.2, 2.4))
    cert = certify_angular(config, domains, radial_steps=STEPS)
    assert cert.coverage.covered
    assert cert.inequality_holds
    assert cert.mu_sum >= cert.mu_disc - 1e-7
    assert all(r.containment_verified for r in cert.regularizations)


def test_strip_wedges_certify(wide_config):
    wedges = strip_to_regular_domains(wide_config, Strip(0.0, -1.0, 1.0))
    cert = certify_angular(wide_config, list(wedges), radial_steps=STEPS)
    assert cert.coverage.covered
    assert cert.inequality_holds


def test_plank_partition():
    strips = [Strip(0.0, -1.0, -0.5), Strip(0.0, -0.5, 0.0), Strip(0.0, 0.0, 1.0)]
    cert = certify_plank(strips, radial_steps=STEPS)
    assert cert.coverage.covered
    assert cert.inequality_holds
    assert cert.sum_widths == approx(PLANK_BOUND)
    assert cert.slack == approx(0.0, abs=1e-12)
    assert sum(cert.zone_areas) == approx(4 * math.pi)


def test_plank_quadrature_zones():
    strips = [Strip(1.0, -1.0, 0.25), Strip(1.0, 0.25, 1.0)]
    cert = certify_plank(strips, radial_steps=STEPS, zone_method=Method.QUADRATURE)
    assert sum(cert.zone_areas) == approx(4 * math.pi, abs=1e-5)


def test_overhanging_strips_are_clipped():
    strips = [Strip(0.0, -3.0, 0.0), Strip(0.0, 0.0, 3.0)]
    cert = certify_plank(strips, radial_steps=STEPS)
    assert cert.sum_widths == approx(6.0)
    assert cert.sum_clipped_widths == approx(2.0)
    assert cert.inequality_holds


def test_crossing_strips():
    strips = [Strip(0.0, -1.0, 1.0), Strip(math.pi / 2, -0.5, 0.5)]
    cert = certify_plank(strips, radial_steps=STEPS)
    assert cert.coverage.covered
    assert cert.slack == approx(1.0)


@mark.parametrize("gap", [0.05, 0.3])
def test_plank_gap_is_vacuous(gap):
    strips = [Strip(0.2, -1.0, 0.0), Strip(0.2, gap, 1.0)]
    cert = certify_plank(strips, radial_steps=STEPS)
    assert cert.vacuous
    assert not cert.inequality_holds
    witness = cert.coverage.witness
    assert 0.0 < witness.dot(strips[0].normal) < gap


def test_narrow_cross_is_vacuous():
    strips = [Strip(0.0, -0.4, 0.4), Strip(math.pi / 2, -0.4, 0.4)]
    cert = certify_plank(strips, radial_steps=STEPS)
    assert cert.vacuous
    witness = cert.coverage.witness
    assert witness.norm <= 1.0
    assert not any(s.contains(witness) for s in strips)


def _random_family(rng, config, covering):
    eps = config.epsilon
    family = [
        make_regular(
            config,
            rng.uniform(0, 2 * math.pi),
            int(rng.choice([-1, 1])),
            rng.uniform(0, eps),
        )
        for _ in range(rng.integers(0, 3))
    ]
    if covering:
        turn = rng.uniform(0, 2 * math.pi)
        halves = (make_regular(config, turn + k * math.pi, 1, eps) for k in (0, 1))
        family += list(halves)
    else:
        family += [
            make_regular(config, rng.uniform(0, 2 * math.pi), 1, rng.uniform(eps, 2 * eps))
            for _ in range(2)
        ]
    return family


@mark.slow
def test_covered_families_never_beat_the_view_angle(config):
    rng = np.random.default_rng(9)
    covered = 0
    for index in range(50):
        family = _random_family(rng, config, covering=index % 2 == 1)
        cert = certify_angular(config, family, radial_steps=STEPS)
        if cert.coverage.covered:
            covered += 1
            assert cert.sum_angles >= cert.view_angle - 1e-9
            assert cert.mu_sum >= cert.mu_disc - 1e-6
            assert not cert.vacuous
    assert covered >= 25
