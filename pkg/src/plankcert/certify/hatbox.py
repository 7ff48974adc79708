from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import PreconditionError
from ..geom import Strip
from ..measure import Method
from ..numerics import DEFAULT_TOL, SingularityHint, integrate

__all__ = ["Slab", "ZoneSpec", "clipped_strip", "hatbox_zone_area"]


@dataclass(frozen=True)
class Slab:
    """
    The 3-D slab ``offset_low ≤ ⟨p, n⟩ ≤ offset_high`` with unit normal ``n``.
    """

    normal: tuple[float, float, float]
    offset_low: float
    offset_high: float

    @property
    def width(self) -> float:
        return self.offset_high - self.offset_low


@dataclass(frozen=True)
class ZoneSpec:
    """
    A planar strip (in the plane z = 0) together with the slab it lifts to, whose
    intersection with the unit sphere is a zone.
    """

    strip: Strip

    @property
    def lifted(self) -> Slab:
        nx, ny = self.strip.normal
        return Slab((nx, ny, 0.0), self.strip.offset_low, self.strip.offset_high)

    @property
    def clipped_width(self) -> float:
        low = max(self.strip.offset_low, -1.0)
        high = min(self.strip.offset_high, 1.0)
        return max(0.0, high - low)


def clipped_strip(strip: Strip) -> Strip:
    """
    The strip cut down to the part of its normal range inside [-1, 1], so both
    bounding lines meet the closed unit disc (a strip missing the disc becomes a
    zero-width strip on its boundary).
    """
    low = min(max(strip.offset_low, -1.0), 1.0)
    high = min(max(strip.offset_high, -1.0), 1.0)
    return Strip(strip.normal_angle, low, high)


def hatbox_zone_area(
    spec: ZoneSpec,
    method: Method = Method.CLOSED_FORM,
    clipped: bool = False,
    tol: float = DEFAULT_TOL,
) -> float:
    """
    Area of the zone cut from the unit sphere by the lifted slab, which is ``2π·d`` for
    a slab of width ``d`` wherever it sits.

    The quadrature path integrates the area element of both hemispheres over the
    planar strip ∩ unit disc as iterated integrals in the frame of the strip's normal
    ``u`` and tangent ``v``: the inner integral ``∫ 2/√(1 − u² − v²) dv`` over
    ``|v| ≤ √(1 − u²)`` has inverse square root singularities at both ends.

    Args:
      spec    : The strip and its slab
      method  : Closed form or quadrature (default: closed form)
      clipped : Whether to clip the slab to [-1, 1] first; otherwise both bounding
                lines must meet the closed unit disc
      tol     : Absolute tolerance for the quadrature (default: 1e-10)
    """
    strip = spec.strip
    if clipped:
        low = max(strip.offset_low, -1.0)
        high = max(low, min(strip.offset_high, 1.0))
    elif -1.0 <= strip.offset_low <= strip.offset_high <= 1.0:
        low, high = strip.offset_low, strip.offset_high
    else:
        raise PreconditionError(
            f"Both bounding lines must meet the unit disc, got {strip} (use clipped=True)"
        )
    if method is Method.CLOSED_FORM:
        return 2 * math.pi * (high - low)

    def inner(h: float, v: float) -> float:
        return 2 / math.sqrt((h - v) * (h + v))

    def section(u: float) -> float:
        h = math.sqrt((1 - u) * (1 + u))
        row = integrate(lambda v: inner(h, v), -h, h, tol=tol, hint=SingularityHint.both())
        return row.value

    return integrate(section, low, high, tol=tol * 10, hint=SingularityHint.both()).value
