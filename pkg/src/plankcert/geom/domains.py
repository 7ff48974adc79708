from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from ..errors import DomainRangeError, PreconditionError
from .arcs import ArcIntervalSet, halfplane_arc, ray_circle_arc
from .primitives import TAU, AnnulusConfig, PointXY, unit

__all__ = [
    "AngularDomain",
    "RegularDomain",
    "RegularWedge",
    "Strip",
    "Shape",
    "make_regular",
    "signed_distance",
    "contains",
    "arc_intersection",
    "strip_arc_intersection",
]

_ALPHA_TOL = 1e-12
# Angles this close to ε put the second halfline through the centre
_CENTRE_SNAP_TOL = 1e-14
_ORIGIN = PointXY(0.0, 0.0)


def _cross(u: tuple[float, float], v: tuple[float, float]) -> float:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class AngularDomain:
    """
    The closed convex wedge with apex ``vertex`` swept counterclockwise from the
    direction ``start_direction`` through ``sweep`` radians. A sweep of π is a closed
    halfplane, a sweep of 0 a single halfline.

    Args:
      vertex          : Apex of the wedge
      start_direction : Angle of the first bounding halfline (radians, reduced to
                        [0, 2π))
      sweep           : Opening angle of the wedge, in [0, π]
    """

    vertex: PointXY
    start_direction: float
    sweep: float

    def __post_init__(self):
        if not 0 <= self.sweep <= math.pi:
            raise DomainRangeError(name="sweep", value=self.sweep, domain="[0, π]")
        object.__setattr__(self, "start_direction", self.start_direction % TAU)

    @property
    def end_direction(self) -> float:
        return (self.start_direction + self.sweep) % TAU

    @property
    def bisector(self) -> float:
        return (self.start_direction + self.sweep / 2) % TAU

    def contains(self, p: PointXY, tol: float = 0.0) -> bool:
        d = p - self.vertex
        if math.hypot(*d) <= tol or d == (0.0, 0.0):
            return True
        if d[0] * math.cos(self.bisector) + d[1] * math.sin(self.bisector) < -tol:
            return False
        if self.sweep == 0:
            return abs(_cross(unit(self.start_direction), d)) <= tol
        in_first = _cross(unit(self.start_direction), d) >= -tol
        return in_first and _cross(d, unit(self.end_direction)) >= -tol


@dataclass(frozen=True)
class RegularDomain:
    """
    A regular angular domain of tangent type: its vertex A lies on the outer circle at
    ``vertex_angle``, one bounding halfline (the tangent halfline) touches the inner
    circle at the point Q, and the other makes the angle ``alpha`` with it on the side
    of the centre. With ``chirality`` +1 the tangent halfline is the counterclockwise
    one (seen from A), with -1 the clockwise one.

    The non-tangent halfline lies at the signed distance ``R·sin(ε − α)`` from the
    origin, positive when the origin is outside the domain. At ``alpha = 2ε`` both
    halflines are tangent and the domain contains the whole inner disc.
    """

    config: AnnulusConfig
    vertex_angle: float
    chirality: int
    alpha: float

    def __post_init__(self):
        if self.chirality not in (1, -1):
            raise DomainRangeError(name="chirality", value=self.chirality, domain="{-1, 1}")
        two_eps = 2 * self.config.epsilon
        if not -_ALPHA_TOL <= self.alpha <= two_eps + _ALPHA_TOL:
            raise DomainRangeError(
                name="alpha", value=self.alpha, domain=f"[0, 2ε] = [0, {two_eps!r}]"
            )
        alpha = min(max(self.alpha, 0.0), two_eps)
        if abs(alpha - self.config.epsilon) <= _CENTRE_SNAP_TOL:
            alpha = self.config.epsilon
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "vertex_angle", self.vertex_angle % TAU)

    @property
    def vertex(self) -> PointXY:
        return PointXY.polar(self.config.R, self.vertex_angle)

    @property
    def inward_direction(self) -> float:
        """
        Direction from the vertex towards the origin.
        """
        return (self.vertex_angle + math.pi) % TAU

    @property
    def tangent_direction(self) -> float:
        return (self.inward_direction + self.chirality * self.config.epsilon) % TAU

    @property
    def second_direction(self) -> float:
        eps = self.config.epsilon
        return (self.inward_direction + self.chirality * (eps - self.alpha)) % TAU

    @property
    def tangent_point(self) -> PointXY:
        """
        The point Q where the tangent halfline touches the inner circle.
        """
        reach = self.config.R * math.cos(self.config.epsilon)
        ux, uy = unit(self.tangent_direction)
        return PointXY(self.vertex.x + reach * ux, self.vertex.y + reach * uy)

    @property
    def signed_distance(self) -> float:
        return self.config.R * math.sin(self.config.epsilon - self.alpha)

    def as_angular(self) -> AngularDomain:
        if self.chirality == 1:
            start = self.second_direction
        else:
            start = self.tangent_direction
        return AngularDomain(self.vertex, start, self.alpha)

    def contains(self, p: PointXY, tol: float = 0.0) -> bool:
        if p == _ORIGIN:
            return self.signed_distance <= tol
        return self.as_angular().contains(p, tol=tol)


@dataclass(frozen=True)
class RegularWedge:
    """
    A regular angular domain in the general sense (vertex on the outer circle, both
    halflines meeting the inner disc) as the closure of ``outer`` minus ``inner``: two
    tangent-type domains sharing vertex and chirality. Without ``inner`` the wedge is
    ``outer`` itself.
    """

    outer: RegularDomain
    inner: Optional[RegularDomain] = None

    def __post_init__(self):
        if self.inner is None:
            return
        o, i = self.outer, self.inner
        same_frame = (
            o.config == i.config
            and o.chirality == i.chirality
            and math.isclose(o.vertex_angle, i.vertex_angle, abs_tol=1e-12)
        )
        if not same_frame:
            raise PreconditionError(
                "Inner and outer domains of a wedge must share config, vertex and "
                f"chirality: {o} vs {i}"
            )
        if i.alpha > o.alpha + _ALPHA_TOL:
            raise PreconditionError(
                f"Inner angle {i.alpha!r} exceeds outer angle {o.alpha!r}"
            )

    @classmethod
    def from_domain(cls, domain: RegularDomain) -> RegularWedge:
        return cls(outer=domain)

    @property
    def config(self) -> AnnulusConfig:
        return self.outer.config

    @property
    def vertex(self) -> PointXY:
        return self.outer.vertex

    @property
    def inner_alpha(self) -> float:
        return 0.0 if self.inner is None else self.inner.alpha

    @property
    def angle(self) -> float:
        return max(0.0, self.outer.alpha - self.inner_alpha)

    def as_angular(self) -> AngularDomain:
        o = self.outer
        if o.chirality == 1:
            start = o.second_direction
        else:
            start = (o.tangent_direction + self.inner_alpha) % TAU
        return AngularDomain(o.vertex, start, self.angle)

    def contains(self, p: PointXY, tol: float = 0.0) -> bool:
        if p == _ORIGIN:
            beyond_inner = self.inner is None or self.inner.signed_distance >= -tol
            return self.outer.signed_distance <= tol and beyond_inner
        return self.as_angular().contains(p, tol=tol)


@dataclass(frozen=True)
class Strip:
    """
    The closed strip ``offset_low ≤ ⟨p, n⟩ ≤ offset_high`` with unit normal ``n`` at
    ``normal_angle``.
    """

    normal_angle: float
    offset_low: float
    offset_high: float

    def __post_init__(self):
        if not self.offset_low <= self.offset_high:
            raise DomainRangeError(
                name="offset_high",
                value=self.offset_high,
                domain=f"[offset_low, ∞) = [{self.offset_low!r}, ∞)",
            )

    @property
    def normal(self) -> tuple[float, float]:
        return unit(self.normal_angle)

    @property
    def width(self) -> float:
        return self.offset_high - self.offset_low

    def contains(self, p: PointXY, tol: float = 0.0) -> bool:
        h = p.dot(self.normal)
        return self.offset_low - tol <= h <= self.offset_high + tol


Shape = Union[AngularDomain, RegularDomain, RegularWedge, Strip]


def make_regular(
    config: AnnulusConfig, vertex_angle: float, chirality: int, alpha: float
) -> RegularDomain:
    """
    Build the tangent-type regular domain with vertex on the outer circle at
    ``vertex_angle`` (raises :class:`~plankcert.errors.DomainRangeError` unless
    ``alpha`` lies in [0, 2ε]).
    """
    return RegularDomain(config, vertex_angle, chirality, alpha)


def signed_distance(config: AnnulusConfig, domain: RegularDomain) -> float:
    """
    Signed distance ``R·sin(ε − α)`` from the origin to the non-tangent halfline,
    positive iff the origin lies outside the domain.
    """
    return config.R * math.sin(config.epsilon - domain.alpha)


def contains(shape: Shape, p: PointXY, tol: float = 0.0) -> bool:
    """
    Membership of ``p`` in the closed ``shape``, with ``tol`` an absolute length slack
    (zero for exact predicates, positive for checking boundary samples).
    """
    return shape.contains(p, tol=tol)


def arc_intersection(
    domain: Union[AngularDomain, RegularDomain, RegularWedge], radius: float
) -> ArcIntervalSet:
    """
    The angles θ at which the point at ``radius`` and angle θ lies in the domain,
    computed from the halfline and circle intersections (no sampling).
    """
    if not radius > 0:
        raise DomainRangeError(name="radius", value=radius, domain="(0, ∞)")
    if not isinstance(domain, AngularDomain):
        domain = domain.as_angular()
    v = domain.vertex
    if domain.sweep == 0:
        return ray_circle_arc(v, domain.start_direction, radius)
    n1 = domain.start_direction + math.pi / 2
    first = halfplane_arc(n1, v.dot(unit(n1)), radius)
    if domain.sweep >= math.pi:
        return first
    n2 = domain.end_direction - math.pi / 2
    return first.intersection(halfplane_arc(n2, v.dot(unit(n2)), radius))


def strip_arc_intersection(strip: Strip, radius: float) -> ArcIntervalSet:
    """
    The angles θ at which the point at ``radius`` and angle θ lies in the strip.
    """
    if not radius > 0:
        raise DomainRangeError(name="radius", value=radius, domain="(0, ∞)")
    low_side = halfplane_arc(strip.normal_angle, strip.offset_low, radius)
    high_side = halfplane_arc(strip.normal_angle + math.pi, -strip.offset_high, radius)
    return low_side.intersection(high_side)
