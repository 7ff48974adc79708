from __future__ import annotations

import logging
import math

from more_itertools import pairwise

from ..errors import DomainRangeError
from ..geom import AnnulusConfig, RegularDomain, RegularWedge, view_angle
from ..numerics import DEFAULT_TOL, SingularityHint, integrate
from .density import MeasureResult, Method, _density
from .profile import RadialProfile

__all__ = [
    "mu_regular",
    "mu_wedge",
    "mu_region",
    "mu_disc",
    "mu_centered_disc",
]

KNOT_MERGE_TOL = 1e-12  # Relative to r

logger = logging.getLogger(__name__)


def mu_regular(
    config: AnnulusConfig,
    domain: RegularDomain,
    method: Method = Method.CLOSED_FORM,
    tol: float = DEFAULT_TOL,
) -> MeasureResult:
    """
    The measure of the intersection of a tangent-type regular domain with the disc T,
    which equals its angle ``alpha``.

    The closed form goes through the signed distance ``t = R·sin(ε − α)`` of the
    non-tangent halfline, as ``ε − arcsin(t/R)``. The quadrature integrates
    ``2f(ρ)ρ·arccos(t/ρ)`` (the density times the arc of the circle of radius ρ inside
    the domain) over ρ from ``|t|`` to ``r``. For ``t < 0`` the circles of radius below
    ``|t|`` lie wholly inside the domain and contribute ``2πf(ρ)ρ``.
    """
    r, R, eps = config.r, config.R, config.epsilon
    t = R * math.sin(eps - domain.alpha)
    if method is Method.CLOSED_FORM:
        return MeasureResult(max(0.0, eps - math.asin(t / R)), method)
    t = min(max(t, -r), r)
    a = abs(t)

    def arc_part(rho: float) -> float:
        ratio = min(max(t / rho, -1.0), 1.0)
        return 2 * _density(config, rho) * rho * math.acos(ratio)

    result = integrate(arc_part, a, r, tol=tol, hint=SingularityHint.both())
    if t < 0:

        def disc_part(rho: float) -> float:
            return 2 * math.pi * _density(config, rho) * rho

        result += integrate(disc_part, 0.0, a, tol=tol, hint=SingularityHint.upper())
    return MeasureResult(max(0.0, result.value), method, result.error_estimate)


def mu_wedge(
    config: AnnulusConfig,
    wedge: RegularWedge,
    method: Method = Method.CLOSED_FORM,
    tol: float = DEFAULT_TOL,
) -> MeasureResult:
    """
    The measure of a general regular domain, as the difference of the measures of its
    outer and inner tangent-type domains.
    """
    if method is Method.CLOSED_FORM:
        return MeasureResult(wedge.angle, method)
    outer = mu_regular(config, wedge.outer, method, tol=tol)
    if wedge.inner is None:
        return outer
    inner = mu_regular(config, wedge.inner, method, tol=tol)
    return MeasureResult(
        max(0.0, outer.value - inner.value),
        method,
        outer.error_estimate + inner.error_estimate,
    )


def mu_region(
    config: AnnulusConfig,
    profile: RadialProfile,
    radial_tol: float = DEFAULT_TOL,
) -> MeasureResult:
    """
    The measure of the part of T described by ``profile``: the integral over (0, r) of
    ``f(ρ)·ρ·(total angle at ρ)``. The interval is split at the profile's breakpoints and
    each piece is integrated with inverse square root hints at both ends. Breakpoints
    within ``KNOT_MERGE_TOL·r`` of 0, of r or of the previous knot are merged into it.

    Args:
      config     : The annulus
      profile    : Angular cross-sections of the region
      radial_tol : Absolute tolerance shared between the radial pieces (default: 1e-10)
    """
    r = config.r
    merge = KNOT_MERGE_TOL * r
    knots = [0.0]
    for b in sorted(profile.breakpoints):
        if b - knots[-1] > merge and r - b > merge:
            knots.append(b)
    knots.append(r)
    pieces = list(pairwise(knots))
    value = error = 0.0

    def integrand(rho: float) -> float:
        return _density(config, rho) * rho * profile.total_angle(rho)

    for lo, hi in pieces:
        if hi - lo <= 0:
            continue
        piece = integrate(
            integrand, lo, hi, tol=radial_tol / len(pieces), hint=SingularityHint.both()
        )
        value += piece.value
        error += piece.error_estimate
    logger.debug(f"μ over {len(pieces)} radial pieces = {value!r} (± {error:.2g})")
    return MeasureResult(max(0.0, value), Method.QUADRATURE, error)


def mu_disc(config: AnnulusConfig) -> float:
    """
    The total measure of T, equal to the view angle ``2·arcsin(r/R)``.
    """
    return view_angle(config)


def mu_centered_disc(
    config: AnnulusConfig,
    rho: float,
    method: Method = Method.CLOSED_FORM,
    tol: float = DEFAULT_TOL,
) -> MeasureResult:
    """
    The measure of the disc of radius ``rho`` about the centre, for ``0 ≤ rho ≤ r``:

    ``2·[arctan(r/√(R² − r²)) − arctan(√(r² − ρ²)/√(R² − r²))]``

    which reaches ``2ε`` at ``rho = r``.
    """
    r, R = config.r, config.R
    if not 0 <= rho <= r:
        raise DomainRangeError(name="rho", value=rho, domain=f"[0, r] = [0, {r!r}]")
    if method is Method.CLOSED_FORM:
        k = math.sqrt(R * R - r * r)
        inner = math.sqrt((r - rho) * (r + rho))
        value = 2 * (math.atan(r / k) - math.atan(inner / k))
        return MeasureResult(max(0.0, value), method)

    def integrand(s: float) -> float:
        return 2 * math.pi * _density(config, s) * s

    result = integrate(integrand, 0.0, rho, tol=tol, hint=SingularityHint.upper())
    return MeasureResult(result.value, method, result.error_estimate)
