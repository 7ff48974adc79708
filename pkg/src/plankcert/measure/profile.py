from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Union

from ..geom import (
    AngularDomain,
    ArcIntervalSet,
    RegularDomain,
    RegularWedge,
    Strip,
    arc_intersection,
    strip_arc_intersection,
)

__all__ = ["RadialProfile"]


def _full(rho: float) -> ArcIntervalSet:
    return ArcIntervalSet.full()


def _empty(rho: float) -> ArcIntervalSet:
    return ArcIntervalSet.empty()


def _domain_section(domain: AngularDomain, rho: float) -> ArcIntervalSet:
    return arc_intersection(domain, rho)


def _strip_section(strip: Strip, rho: float) -> ArcIntervalSet:
    return strip_arc_intersection(strip, rho)


def _union_section(sections: tuple, rho: float) -> ArcIntervalSet:
    return ArcIntervalSet.union_all(section(rho) for section in sections)


def _rotated_section(section: Callable, angle: float, rho: float) -> ArcIntervalSet:
    return section(rho).rotated(angle)


@dataclass(frozen=True)
class RadialProfile:
    """
    A region of the plane described by its cross-section with each circle about the
    origin: ``cross_section(ρ)`` is the set of angles θ with the point at radius ρ and
    angle θ inside the region.

    ``breakpoints`` are radii at which the cross-section changes form (a bounding line
    starts or stops meeting the circle, or the circle passes through a vertex). The
    total angle is smooth between consecutive breakpoints, up to square root behaviour
    at the breakpoints themselves.
    """

    cross_section: Callable[[float], ArcIntervalSet]
    breakpoints: tuple[float, ...] = field(default=())

    def total_angle(self, rho: float) -> float:
        return self.cross_section(rho).total_length

    @classmethod
    def full(cls) -> RadialProfile:
        return cls(_full)

    @classmethod
    def empty(cls) -> RadialProfile:
        return cls(_empty)

    @classmethod
    def from_domain(cls, domain: AngularDomain) -> RadialProfile:
        v = domain.vertex
        radii = [v.norm]
        for direction in (domain.start_direction, domain.end_direction):
            # Distance from the origin to the supporting line of each halfline
            radii.append(abs(v.x * math.sin(direction) - v.y * math.cos(direction)))
        return cls(partial(_domain_section, domain), tuple(sorted(set(radii))))

    @classmethod
    def from_regular(cls, domain: Union[RegularDomain, RegularWedge]) -> RadialProfile:
        return cls.from_domain(domain.as_angular())

    @classmethod
    def from_strip(cls, strip: Strip) -> RadialProfile:
        radii = {abs(strip.offset_low), abs(strip.offset_high)}
        return cls(partial(_strip_section, strip), tuple(sorted(radii)))

    @classmethod
    def union(cls, profiles: Iterable[RadialProfile]) -> RadialProfile:
        profiles = list(profiles)
        if not profiles:
            return cls.empty()
        radii = {b for p in profiles for b in p.breakpoints}
        sections = tuple(p.cross_section for p in profiles)
        return cls(partial(_union_section, sections), tuple(sorted(radii)))

    def rotated(self, angle: float) -> RadialProfile:
        """
        The profile of the region rotated counterclockwise by ``angle`` radians (the
        breakpoints are unchanged).
        """
        section = partial(_rotated_section, self.cross_section, angle)
        return RadialProfile(section, self.breakpoints)
