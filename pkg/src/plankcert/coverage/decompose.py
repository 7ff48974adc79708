from __future__ import annotations

import logging
import math

from ..errors import PreconditionError
from ..geom import AngularDomain, AnnulusConfig, PointXY, RegularWedge, Strip
from .regularize import regularize

__all__ = ["chord_quadrilateral", "strip_to_regular_domains"]

logger = logging.getLogger(__name__)


def chord_quadrilateral(
    config: AnnulusConfig, strip: Strip
) -> tuple[PointXY, PointXY, PointXY, PointXY]:
    """
    The points A, B (low bounding line) and C, D (high bounding line) where the strip's
    bounding lines cross the outer circle, labelled so that B and C lie on the same
    side and BD is a diagonal of the quadrilateral ABCD.
    """
    r, R = config.r, config.R
    offsets = (("offset_low", strip.offset_low), ("offset_high", strip.offset_high))
    for name, offset in offsets:
        if abs(offset) > r:
            raise PreconditionError(
                f"Bounding line {name}={offset!r} misses the inner disc (r={r!r})"
            )
    nx, ny = strip.normal
    tx, ty = -ny, nx
    c1, c2 = strip.offset_low, strip.offset_high
    h1, h2 = math.sqrt(R * R - c1 * c1), math.sqrt(R * R - c2 * c2)
    a = PointXY(c1 * nx - h1 * tx, c1 * ny - h1 * ty)
    b = PointXY(c1 * nx + h1 * tx, c1 * ny + h1 * ty)
    c = PointXY(c2 * nx + h2 * tx, c2 * ny + h2 * ty)
    d = PointXY(c2 * nx - h2 * tx, c2 * ny - h2 * ty)
    return a, b, c, d


def _wedge(apex: PointXY, p: PointXY, q: PointXY) -> AngularDomain:
    """
    The convex wedge at ``apex`` bounded by the halflines through ``p`` and ``q``.
    """
    to_p = math.atan2(p.y - apex.y, p.x - apex.x)
    to_q = math.atan2(q.y - apex.y, q.x - apex.x)
    turn = math.remainder(to_q - to_p, 2 * math.pi)
    if turn >= 0:
        return AngularDomain(apex, to_p, min(turn, math.pi))
    return AngularDomain(apex, to_q, min(-turn, math.pi))


def strip_to_regular_domains(
    config: AnnulusConfig, strip: Strip
) -> tuple[RegularWedge, RegularWedge]:
    """
    Cover the part of ``strip`` in T by two regular wedges: the wedges ∠ABD (vertex B)
    and ∠BDC (vertex D) of :func:`chord_quadrilateral`, each regularized. Both wedge
    angles are at most ``arctan(d/(h₁ + h₂))`` where ``d`` is the strip width and
    ``hᵢ = √(R² − cᵢ²)`` the half chord lengths.

    Raises :class:`~plankcert.errors.PreconditionError` unless both bounding lines
    meet the inner disc.
    """
    a, b, c, d = chord_quadrilateral(config, strip)
    first = regularize(config, _wedge(b, a, d))
    second = regularize(config, _wedge(d, b, c))
    for result in (first, second):
        if not result.containment_verified:
            logger.warning(f"Decomposition wedge containment unverified: {result}")
    return first.regular, second.regular
