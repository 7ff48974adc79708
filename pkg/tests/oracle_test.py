from pytest import approx

from plankcert.certify import NEAR_SINGULAR_TOL, ORACLE_TOL, oracle_compare
from plankcert.geom import RegularWedge, make_regular

GRID = 10

IDENTITIES = [
    "density_profile",
    "antiderivative_endpoints",
    "antiderivative_interior",
    "radial_profile",
    "radial_profile_edge",
    "mu_regular",
    "mu_regular_edge",
    "disc_measure",
    "zone_areas",
]


def test_identity_rows_only_for_empty_scene(config):
    rows = oracle_compare(config, grid=GRID)
    assert [row.identity for row in rows] == IDENTITIES
    for row in rows:
        assert row.passed, row
        assert row.max_residual <= row.tolerance


def test_domain_rows(config):
    domains = [
        make_regular(config, 0.0, 1, 0.3),
        RegularWedge(
            make_regular(config, 1.0, -1, 0.9), make_regular(config, 1.0, -1, 0.1)
        ),
    ]
    rows = oracle_compare(config, domains, grid=GRID)
    assert [row.identity for row in rows[-2:]] == ["domain[0]", "domain[1]"]
    assert rows[-2].tolerance == ORACLE_TOL
    assert all(row.passed for row in rows)


def test_near_singular_domain(config):
    domain = make_regular(config, 0.0, 1, config.view_angle - 1e-4)
    [row] = oracle_compare(config, [domain], grid=GRID)[-1:]
    assert row.tolerance == NEAR_SINGULAR_TOL
    assert row.passed
    assert row.max_residual == approx(0.0, abs=NEAR_SINGULAR_TOL)


def test_seeded_zone_rows_repeat(config):
    first = oracle_compare(config, grid=GRID, seed=3)
    second = oracle_compare(config, grid=GRID, seed=3)
    assert first[-1].max_residual == second[-1].max_residual
