from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import PreconditionError, UnsupportedInputError
from ..geom import (
    TAU,
    AngularDomain,
    AnnulusConfig,
    PointXY,
    RegularDomain,
    RegularWedge,
    arc_intersection,
    unit,
)

__all__ = [
    "DEFAULT_BOUNDARY_SAMPLES",
    "RegularizationResult",
    "regularize",
    "boundary_samples",
]

DEFAULT_BOUNDARY_SAMPLES = 10**4

_RATIO_TOL = 1e-12
_SAMPLE_ANGLE_TOL = 1e-9
_INNER_ALPHA_FLOOR = 1e-14

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RegularizationResult:
    """
    The smallest regular wedge with vertex on the outer circle (at the radial
    projection of the original vertex) containing the part of ``original`` in T.

    Args:
      original             : The domain as given
      regular              : The containing regular wedge
      angle_ratio          : ``regular.angle / original.sweep``
      containment_verified : Whether boundary samples of ``original`` ∩ T all lie in
                             ``regular``
    """

    original: AngularDomain
    regular: RegularWedge
    angle_ratio: float
    containment_verified: bool

    @property
    def ratio_violated(self) -> bool:
        return self.angle_ratio > 1 + _RATIO_TOL


def _segment_in_disc(
    origin: PointXY, direction: float, radius: float
) -> tuple[float, float] | None:
    """
    Parameter range ``[s_lo, s_hi]`` (with ``s ≥ 0``) of the halfline
    ``origin + s·u(direction)`` inside the closed disc of the given radius.
    """
    ux, uy = unit(direction)
    b = origin.x * ux + origin.y * uy
    c = origin.x**2 + origin.y**2 - radius**2
    disc = b * b - c
    if disc < 0:
        return None
    root = math.sqrt(disc)
    s_lo, s_hi = max(-b - root, 0.0), -b + root
    return None if s_hi < s_lo else (s_lo, s_hi)


def boundary_samples(
    domain: AngularDomain, radius: float, n_samples: int = DEFAULT_BOUNDARY_SAMPLES
) -> np.ndarray:
    """
    About ``n_samples`` points spread over the boundary of ``domain`` ∩ (closed disc of
    the given radius), as an array of shape ``(n, 2)``: arcs of the circle inside the
    domain, and the parts of the bounding halflines inside the disc.
    """
    pieces: list[tuple[str, tuple]] = []
    for arc in arc_intersection(domain, radius).circular_intervals():
        pieces.append(("arc", (arc.start, arc.length)))
    directions = {domain.start_direction, domain.end_direction}
    for direction in directions:
        segment = _segment_in_disc(domain.vertex, direction, radius)
        if segment is not None:
            pieces.append(("ray", (direction, *segment)))
    if not pieces:
        return np.empty((0, 2))
    lengths = np.array(
        [radius * p[1] if kind == "arc" else p[2] - p[1] for kind, p in pieces]
    )
    total = lengths.sum()
    weights = lengths / total if total > 0 else np.full(len(pieces), 1 / len(pieces))
    points = []
    for (kind, params), weight in zip(pieces, weights):
        n = max(2, int(round(weight * n_samples)))
        if kind == "arc":
            start, length = params
            theta = start + np.linspace(0.0, length, n)
            points.append(radius * np.column_stack([np.cos(theta), np.sin(theta)]))
        else:
            direction, s_lo, s_hi = params
            s = np.linspace(s_lo, s_hi, n)
            ux, uy = unit(direction)
            points.append(
                np.column_stack([domain.vertex.x + s * ux, domain.vertex.y + s * uy])
            )
    return np.concatenate(points)


def _wrap(angle: float | np.ndarray):
    """
    Reduce to (-π, π].
    """
    return math.pi - np.mod(math.pi - angle, TAU)


def _candidates(
    config: AnnulusConfig, domain: AngularDomain, apex: PointXY
) -> list[PointXY]:
    """
    Points of ``domain`` ∩ T at which the direction seen from ``apex`` can be extreme:
    the tangent points from ``apex`` to the inner circle that lie in the domain, the
    points where the bounding halflines cross the inner circle, and the vertex.
    """
    r, R, eps = config.r, config.R, config.epsilon
    tol = 1e-9 * R
    inward = apex.angle + math.pi
    found = []
    for side in (1, -1):
        reach = R * math.cos(eps)
        ux, uy = unit(inward + side * eps)
        q = PointXY(apex.x + reach * ux, apex.y + reach * uy)
        if domain.contains(q, tol=tol):
            found.append(q)
    for direction in {domain.start_direction, domain.end_direction}:
        segment = _segment_in_disc(domain.vertex, direction, r)
        if segment is not None:
            ux, uy = unit(direction)
            for s in segment:
                found.append(PointXY(domain.vertex.x + s * ux, domain.vertex.y + s * uy))
    if domain.vertex.norm <= r:
        found.append(domain.vertex)
    return found


def regularize(
    config: AnnulusConfig,
    domain: Union[AngularDomain, RegularDomain, RegularWedge],
    n_samples: int = DEFAULT_BOUNDARY_SAMPLES,
) -> RegularizationResult:
    """
    Replace ``domain`` by the smallest regular wedge containing its part in T, with
    vertex moved radially onto the outer circle. The angle of the result is measured
    against the original (the ratio may exceed 1, which is logged rather than assumed
    away).

    Raises :class:`~plankcert.errors.UnsupportedInputError` for a vertex strictly
    inside the inner circle and :class:`~plankcert.errors.PreconditionError` for one
    outside the outer circle.

    Args:
      config    : The annulus
      domain    : The domain to regularize
      n_samples : Boundary samples used to verify containment (default: 10**4)
    """
    if not isinstance(domain, AngularDomain):
        domain = domain.as_angular()
    r, R, eps = config.r, config.R, config.epsilon
    distance = domain.vertex.norm
    if distance < r * (1 - 1e-12):
        raise UnsupportedInputError(
            f"Vertex at distance {distance!r} is strictly inside the inner circle (r={r!r})"
        )
    if distance > R * (1 + 1e-12):
        raise PreconditionError(
            f"Vertex at distance {distance!r} is outside the outer circle (R={R!r})"
        )
    vertex_angle = domain.vertex.angle
    apex = PointXY.polar(R, vertex_angle)
    inward = vertex_angle + math.pi
    points = _candidates(config, domain, apex)
    if not points:
        logger.debug(f"{domain} misses the inner disc: zero wedge")
        outer = RegularDomain(config, vertex_angle, 1, 0.0)
        return RegularizationResult(domain, RegularWedge(outer), 0.0, True)
    betas = [
        min(max(float(_wrap(math.atan2(p.y - apex.y, p.x - apex.x) - inward)), -eps), eps)
        for p in points
    ]
    beta_lo, beta_hi = min(betas), max(betas)
    if -beta_lo <= beta_hi:
        chirality, alpha_outer, alpha_inner = 1, eps - beta_lo, eps - beta_hi
    else:
        chirality, alpha_outer, alpha_inner = -1, beta_hi + eps, beta_lo + eps
    outer = RegularDomain(config, vertex_angle, chirality, alpha_outer)
    inner = (
        None
        if alpha_inner <= _INNER_ALPHA_FLOOR
        else RegularDomain(config, vertex_angle, chirality, alpha_inner)
    )
    regular = RegularWedge(outer, inner)
    if domain.sweep > 0:
        ratio = regular.angle / domain.sweep
    else:
        ratio = 1.0 if regular.angle == 0 else math.inf
    samples = boundary_samples(domain, r, n_samples)
    wedge = regular.as_angular()
    # Sample directions relative to the wedge start, in (-π, π]
    offsets = _wrap(
        np.arctan2(samples[:, 1] - apex.y, samples[:, 0] - apex.x) - wedge.start_direction
    )
    verified = bool(
        np.all(offsets >= -_SAMPLE_ANGLE_TOL)
        and np.all(offsets <= wedge.sweep + _SAMPLE_ANGLE_TOL)
    )
    result = RegularizationResult(domain, regular, ratio, verified)
    if result.ratio_violated:
        logger.warning(
            f"Regularized angle {regular.angle!r} exceeds original {domain.sweep!r} "
            f"(ratio {ratio!r})"
        )
    if not verified:
        logger.warning(f"Containment not verified for {domain}")
    return result
