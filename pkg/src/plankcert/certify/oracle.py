"""
Closed form against quadrature, identity by identity, as a table of residuals.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from tqdm import tqdm

from ..errors import IntegrationError
from ..geom import AnnulusConfig, RegularDomain, RegularWedge, Strip
from ..measure import (
    Method,
    RadialProfile,
    antiderivative_G,
    mu_centered_disc,
    mu_disc,
    mu_region,
    mu_regular,
    mu_wedge,
    radial_profile_integral,
)
from ..measure.density import _density
from ..numerics import SingularityHint, integrate
from .hatbox import ZoneSpec, hatbox_zone_area

__all__ = [
    "ORACLE_TOL",
    "NEAR_SINGULAR_TOL",
    "OracleRow",
    "oracle_compare",
]

ORACLE_TOL = 1e-7
NEAR_SINGULAR_TOL = 1e-6
_ENDPOINT_TOL = 1e-10
_PROFILE_TOL = 1e-8
_DISC_TOL = 1e-8
_EDGE_FRACTION = 0.999
_NEAR_SINGULAR_FRACTION = 1e-3
_ZONE_SAMPLES = 20

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleRow:
    identity: str
    max_residual: float
    tolerance: float
    passed: bool
    detail: str = ""


def _row(
    identity: str, tolerance: float, residuals: Callable[[], list[float]]
) -> OracleRow:
    """
    Evaluate the residuals of one identity, turning quadrature failures into a failed
    row carrying the error message.
    """
    try:
        values = residuals()
    except IntegrationError as exc:
        logger.warning(f"{identity}: quadrature failed: {exc}")
        return OracleRow(identity, math.inf, tolerance, False, detail=str(exc))
    worst = max(values, default=0.0)
    passed = bool(worst <= tolerance)
    detail = f"{len(values)} point(s)"
    return OracleRow(identity, worst, tolerance, passed, detail=detail)


def _near_singular(config: AnnulusConfig, alpha: float) -> bool:
    """
    Whether the non-tangent halfline of a regular domain with angle ``alpha`` passes
    within ``1e-3·r`` of the singular circle.
    """
    t = config.R * math.sin(config.epsilon - alpha)
    return config.r - abs(t) < _NEAR_SINGULAR_FRACTION * config.r


def oracle_compare(
    config: AnnulusConfig,
    regular_domains: Sequence[Union[RegularDomain, RegularWedge]] = (),
    grid: int = 50,
    seed: int = 0,
    show_progress: bool = False,
) -> list[OracleRow]:
    """
    Compare every closed form with its quadrature oracle over grids of arguments, and
    report the largest absolute residual of each identity against its tolerance.

    Args:
      config          : The annulus
      regular_domains : Scene domains, each adding a row for its measure
      grid            : Number of grid points per identity (default: 50)
      seed            : Seed for the random zone placements (default: 0)
      show_progress   : Whether to show a tqdm progress bar (default: False)
    """
    r, R, eps = config.r, config.R, config.epsilon
    t_grid = np.linspace(-0.95 * r, 0.95 * r, grid)
    rng = np.random.default_rng(seed)

    def density_profile() -> list[float]:
        return [
            abs(
                mu_centered_disc(config, rho, Method.CLOSED_FORM).value
                - mu_centered_disc(config, rho, Method.QUADRATURE).value
            )
            for rho in np.linspace(0.0, r, grid)
        ]

    def antiderivative_endpoints() -> list[float]:
        out = []
        for t in t_grid:
            out.append(abs(antiderivative_G(config, abs(t), t)))
            out.append(abs(antiderivative_G(config, r, t) - 1 / math.sqrt(R * R - t * t)))
        return out

    def antiderivative_interior() -> list[float]:
        out = []
        for t in t_grid:
            a = abs(t)
            rho = a + (r - a) / 2

            def integrand(s: float, a: float = a) -> float:
                return 2 * _density(config, s) * s / math.sqrt((s - a) * (s + a))

            oracle = integrate(integrand, a, rho, hint=SingularityHint.lower())
            out.append(abs(antiderivative_G(config, rho, t) - oracle.value))
        return out

    def radial_profile(ts) -> Callable[[], list[float]]:
        def residuals() -> list[float]:
            return [
                abs(
                    radial_profile_integral(config, t, Method.CLOSED_FORM).value
                    - radial_profile_integral(config, t, Method.QUADRATURE).value
                )
                for t in ts
            ]

        return residuals

    alphas = np.linspace(0.0, 2 * eps, grid)
    regular_alphas = [a for a in alphas if not _near_singular(config, a)]
    edge_alphas = [a for a in alphas if _near_singular(config, a)]

    def mu_regular_rows(selected) -> Callable[[], list[float]]:
        def residuals() -> list[float]:
            return [
                abs(
                    mu_regular(
                        config, RegularDomain(config, 0.0, 1, a), Method.QUADRATURE
                    ).value
                    - a
                )
                for a in selected
            ]

        return residuals

    def disc_measure() -> list[float]:
        full = mu_region(config, RadialProfile.full())
        return [abs(full.value - mu_disc(config))]

    def zone_areas() -> list[float]:
        out = []
        for _ in range(min(grid, _ZONE_SAMPLES)):
            low, high = np.sort(rng.uniform(-1.0, 1.0, size=2))
            angle = float(rng.uniform(0, 2 * math.pi))
            spec = ZoneSpec(Strip(angle, float(low), float(high)))
            area = hatbox_zone_area(spec, Method.QUADRATURE)
            out.append(abs(area - 2 * math.pi * spec.strip.width))
        return out

    checks: list[tuple[str, float, Callable[[], list[float]]]] = [
        ("density_profile", ORACLE_TOL, density_profile),
        ("antiderivative_endpoints", _ENDPOINT_TOL, antiderivative_endpoints),
        ("antiderivative_interior", _PROFILE_TOL, antiderivative_interior),
        ("radial_profile", _PROFILE_TOL, radial_profile(t_grid)),
        (
            "radial_profile_edge",
            NEAR_SINGULAR_TOL,
            radial_profile([-_EDGE_FRACTION * r, _EDGE_FRACTION * r]),
        ),
        ("mu_regular", ORACLE_TOL, mu_regular_rows(regular_alphas)),
        ("mu_regular_edge", NEAR_SINGULAR_TOL, mu_regular_rows(edge_alphas)),
        ("disc_measure", _DISC_TOL, disc_measure),
        ("zone_areas", NEAR_SINGULAR_TOL, zone_areas),
    ]
    for i, domain in enumerate(regular_domains):
        wedge = domain if isinstance(domain, RegularWedge) else RegularWedge(domain)
        near = _near_singular(config, wedge.outer.alpha) or (
            wedge.inner is not None and _near_singular(config, wedge.inner.alpha)
        )

        def domain_residual(wedge: RegularWedge = wedge) -> list[float]:
            quad = mu_wedge(config, wedge, Method.QUADRATURE)
            return [abs(quad.value - wedge.angle)]

        tolerance = NEAR_SINGULAR_TOL if near else ORACLE_TOL
        checks.append((f"domain[{i}]", tolerance, domain_residual))
    rows = []
    for identity, tolerance, residuals in tqdm(
        checks, desc="Oracle rows", disable=not show_progress
    ):
        row = _row(identity, tolerance, residuals)
        logger.info(
            f"{identity}: max residual {row.max_residual:.3g} "
            f"(tolerance {tolerance:g}) {'ok' if row.passed else 'FAILED'}"
        )
        rows.append(row)
    return rows
