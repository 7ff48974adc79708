from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from ..coverage import check_coverage, strip_to_regular_domains
from ..errors import PreconditionError
from ..geom import AnnulusConfig, Strip
from .hatbox import clipped_strip

__all__ = ["LimitRow", "LimitTable", "tile_strips", "limit_derivation_check"]

_LINK_TOL = 1e-12
_LIMIT_RADIAL_STEPS = 128

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LimitRow:
    """
    The bound chain ``2Σdᵢ/(2R − 2) ≥ Σ(αᵢ′ + αᵢ″) ≥ 2ε ≥ 2·sin ε = 2/R`` at one outer
    radius ``R``, where ``αᵢ′, αᵢ″`` are the angles of the two regular wedges covering
    strip ``i`` at that radius.

    ``links`` holds the verdict of each of the three inequalities in order, and
    ``wedge_bound_violations`` counts wedges with ``tan α > dᵢ/(2R − 2)``. The middle
    link is the angular covering theorem, so it is only asserted when the wedges were
    found to cover the unit disc (``covered``).
    """

    R: float
    sum_widths: float
    width_bound: float
    wedge_angle_sum: float
    view_angle: float
    sine_bound: float
    implied_bound: float
    links: tuple[bool, bool, bool]
    wedge_bound_violations: int
    covered: bool

    @property
    def holds(self) -> bool:
        return all(self.links)


@dataclass(frozen=True)
class LimitTable:
    """
    Rows of :class:`LimitRow` in increasing ``R``; ``monotone`` says whether the implied
    lower bound ``(2R − 2)/R`` on the width sum is non-decreasing along them.
    """

    rows: list[LimitRow]
    monotone: bool

    @property
    def holds(self) -> bool:
        return self.monotone and all(row.holds for row in self.rows)


def tile_strips(widths: Sequence[float], normal_angle: float = 0.0) -> list[Strip]:
    """
    Consecutive strips with the given widths laid side by side across [-1, 1] from -1,
    the last one cut off at 1.
    """
    strips = []
    low = -1.0
    for i, width in enumerate(widths):
        high = low + width
        if i == len(widths) - 1 and high > 1.0:
            high = max(1.0, low)
        strips.append(Strip(normal_angle, low, high))
        low += width
    return strips


def limit_derivation_check(
    strip_widths: Sequence[float],
    R_values: Sequence[float],
    strips: Optional[Sequence[Strip]] = None,
    radial_steps: int = _LIMIT_RADIAL_STEPS,
) -> LimitTable:
    """
    Evaluate the chain bounding the width sum of a strip covering of the unit disc via
    regular wedges at each outer radius in ``R_values``. As ``R`` grows the implied
    bound ``(2R − 2)/R`` on ``Σdᵢ`` increases towards 2.

    Args:
      strip_widths : Widths of the covering strips
      R_values     : Outer radii, each at least 2
      strips       : The strips themselves (default: :func:`tile_strips` of the widths)
      radial_steps : Radii checked when testing the wedges' coverage (default: 128)
    """
    if strips is None:
        strips = tile_strips(strip_widths)
    strips = [clipped_strip(s) for s in strips]
    widths = [s.width for s in strips]
    sum_widths = math.fsum(widths)
    rows = []
    for R in sorted(R_values):
        if R < 2:
            raise PreconditionError(f"Outer radius must be at least 2, got {R=}")
        config = AnnulusConfig(1.0, R)
        wedges = []
        violations = 0
        for strip, width in zip(strips, widths):
            pair = strip_to_regular_domains(config, strip)
            wedges.extend(pair)
            bound = width / (2 * R - 2)
            violations += sum(math.tan(w.angle) > bound + _LINK_TOL for w in pair)
        if violations:
            logger.warning(f"{violations} wedge angle(s) above d/(2R-2) at {R=}")
        covered = check_coverage(config, domains=wedges, radial_steps=radial_steps).covered
        width_bound = 2 * sum_widths / (2 * R - 2)
        wedge_sum = math.fsum(w.angle for w in wedges)
        view = config.view_angle
        sine_bound = 2 / R
        links = (
            width_bound >= wedge_sum - _LINK_TOL,
            (wedge_sum >= view - _LINK_TOL) if covered else True,
            view >= sine_bound - _LINK_TOL,
        )
        rows.append(
            LimitRow(
                R=R,
                sum_widths=sum_widths,
                width_bound=width_bound,
                wedge_angle_sum=wedge_sum,
                view_angle=view,
                sine_bound=sine_bound,
                implied_bound=(2 * R - 2) / R,
                links=links,
                wedge_bound_violations=violations,
                covered=covered,
            )
        )
    implied = [row.implied_bound for row in rows]
    monotone = all(a <= b for a, b in zip(implied, implied[1:]))
    return LimitTable(rows=rows, monotone=monotone)
