from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ..errors import DomainRangeError
from ..geom import AnnulusConfig
from ..numerics import DEFAULT_TOL, SingularityHint, integrate

__all__ = [
    "Method",
    "MeasureResult",
    "density",
    "antiderivative_G",
    "radial_profile_integral",
]


class Method(Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"


@dataclass(frozen=True)
class MeasureResult:
    """
    A measure value (in radians: regular domains measure their angle) with the method
    that produced it. Closed forms report a zero error estimate.
    """

    value: float
    method: Method
    error_estimate: float = 0.0


def _density(config: AnnulusConfig, rho: float) -> float:
    # Unchecked form for quadrature nodes, which never sit on ρ = r
    r, R = config.r, config.R
    return math.sqrt((R * R - r * r) / ((r - rho) * (r + rho))) / (
        math.pi * (R * R - rho * rho)
    )


def density(config: AnnulusConfig, rho: float) -> float:
    """
    The rotation-invariant density at distance ``rho`` from the centre,
    ``f(ρ) = (1/π)·(R² − ρ²)⁻¹·√((R² − r²)/(r² − ρ²))``. It is positive and strictly
    increasing on [0, r), and diverges at ρ = r, which is outside its domain.
    """
    if not 0 <= rho < config.r:
        raise DomainRangeError(name="rho", value=rho, domain=f"[0, r) = [0, {config.r!r})")
    return _density(config, rho)


def antiderivative_G(config: AnnulusConfig, rho: float, t: float) -> float:
    """
    The arctangent antiderivative in ``rho`` of ``2f(ρ)ρ/√(ρ² − t²)``, vanishing at
    ``rho = |t|``:

    ``G = (2/π)·(R² − t²)^(-1/2)·arctan√(((R² − r²)/(R² − t²))·((ρ² − t²)/(r² − ρ²)))``

    At ``rho = r`` the analytic limit ``(R² − t²)^(-1/2)`` is returned.

    Args:
      config : The annulus
      rho    : Upper limit of integration, with ``|t| ≤ rho ≤ r``
      t      : Signed distance, with ``|t| < r``
    """
    r, R = config.r, config.R
    if not abs(t) < r:
        raise DomainRangeError(name="t", value=t, domain=f"(-r, r) = (-{r!r}, {r!r})")
    if not abs(t) <= rho <= r:
        domain = f"[|t|, r] = [{abs(t)!r}, {r!r}]"
        raise DomainRangeError(name="rho", value=rho, domain=domain)
    scale = 1 / math.sqrt(R * R - t * t)
    if rho == r:
        return scale
    ratio = ((R * R - r * r) / (R * R - t * t)) * (
        (rho - abs(t)) * (rho + abs(t)) / ((r - rho) * (r + rho))
    )
    return (2 / math.pi) * scale * math.atan(math.sqrt(ratio))


def radial_profile_integral(
    config: AnnulusConfig,
    t: float,
    method: Method = Method.CLOSED_FORM,
    tol: float = DEFAULT_TOL,
) -> MeasureResult:
    """
    The integral ``∫ 2f(ρ)ρ/√(ρ² − t²) dρ`` over ``ρ ∈ (|t|, r)``, which equals
    ``1/√(R² − t²)`` for every ``t`` in (-r, r). The quadrature path treats both
    endpoints as inverse square root singular.
    """
    r, R = config.r, config.R
    if not abs(t) < r:
        raise DomainRangeError(name="t", value=t, domain=f"(-r, r) = (-{r!r}, {r!r})")
    if method is Method.CLOSED_FORM:
        return MeasureResult(1 / math.sqrt(R * R - t * t), method)
    a = abs(t)

    def integrand(rho: float) -> float:
        return 2 * _density(config, rho) * rho / math.sqrt((rho - a) * (rho + a))

    result = integrate(integrand, a, r, tol=tol, hint=SingularityHint.both())
    return MeasureResult(result.value, method, result.error_estimate)
