from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .primitives import TAU, PointXY

__all__ = [
    "ANGLE_TOL",
    "LENGTH_TOL",
    "CircularArc",
    "ArcIntervalSet",
    "halfplane_arc",
    "ray_circle_arc",
]

ANGLE_TOL = 1e-12
LENGTH_TOL = 1e-12


class CircularArc(NamedTuple):
    """
    A closed arc of the circle running counterclockwise for ``length`` radians from
    ``start`` (which lies in [0, 2π)).
    """

    start: float
    length: float

    @property
    def end(self) -> float:
        return (self.start + self.length) % TAU

    @property
    def midpoint(self) -> float:
        return (self.start + self.length / 2) % TAU


def _normalise(pieces: Iterable[tuple[float, float]], tol: float) -> tuple:
    """
    Sort and merge linear pieces of [0, 2π], snapping endpoints within ``tol`` of the
    seam onto it so that a wrapped arc meets itself across the seam.
    """
    snapped = []
    for lo, hi in pieces:
        lo = 0.0 if lo < tol else min(lo, TAU)
        hi = TAU if hi > TAU - tol else max(hi, 0.0)
        if hi >= lo:
            snapped.append((lo, hi))
    snapped.sort()
    merged: list[tuple[float, float]] = []
    for lo, hi in snapped:
        if merged and lo <= merged[-1][1] + tol:
            prev_lo, prev_hi = merged[-1]
            merged[-1] = (prev_lo, max(prev_hi, hi))
        else:
            merged.append((lo, hi))
    return tuple(merged)


@dataclass(frozen=True)
class ArcIntervalSet:
    """
    A closed subset of the circle made of finitely many disjoint arcs, stored as sorted
    linear pieces of [0, 2π]. An arc crossing angle 0 is held as two pieces, one ending
    at 2π and one starting at 0; :meth:`circular_intervals` rejoins them.

    Build instances with :meth:`empty`, :meth:`full`, :meth:`arc` or the set operations
    rather than by passing ``pieces`` directly, which skips normalisation.
    """

    pieces: tuple[tuple[float, float], ...] = ()

    @classmethod
    def from_pieces(
        cls, pieces: Iterable[tuple[float, float]], tol: float = ANGLE_TOL
    ) -> ArcIntervalSet:
        return cls(_normalise(pieces, tol=tol))

    @classmethod
    def empty(cls) -> ArcIntervalSet:
        return cls(())

    @classmethod
    def full(cls) -> ArcIntervalSet:
        return cls(((0.0, TAU),))

    @classmethod
    def arc(cls, start: float, length: float, tol: float = ANGLE_TOL) -> ArcIntervalSet:
        """
        The closed arc from ``start`` counterclockwise through ``length`` radians. A
        zero ``length`` gives a single point, a ``length`` of 2π or more the full circle.
        """
        if length < 0:
            raise ValueError(f"Arc length must be non-negative, got {length=}")
        if length >= TAU - tol:
            return cls.full()
        start %= TAU
        end = start + length
        if end <= TAU:
            return cls.from_pieces([(start, end)], tol=tol)
        return cls.from_pieces([(start, TAU), (0.0, end - TAU)], tol=tol)

    @classmethod
    def union_all(
        cls, sets: Iterable[ArcIntervalSet], tol: float = ANGLE_TOL
    ) -> ArcIntervalSet:
        return cls.from_pieces((p for s in sets for p in s.pieces), tol=tol)

    def union(self, other: ArcIntervalSet, tol: float = ANGLE_TOL) -> ArcIntervalSet:
        return self.union_all([self, other], tol=tol)

    def intersection(
        self, other: ArcIntervalSet, tol: float = ANGLE_TOL
    ) -> ArcIntervalSet:
        out = []
        i = j = 0
        while i < len(self.pieces) and j < len(other.pieces):
            a_lo, a_hi = self.pieces[i]
            b_lo, b_hi = other.pieces[j]
            lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
            if hi >= lo - tol:
                out.append((lo, max(lo, hi)))
            if a_hi < b_hi:
                i += 1
            else:
                j += 1
        return self.from_pieces(out, tol=tol)

    @property
    def is_empty(self) -> bool:
        return not self.pieces

    @property
    def total_length(self) -> float:
        return min(TAU, sum(hi - lo for lo, hi in self.pieces))

    def gaps(self, tol: float = ANGLE_TOL) -> list[CircularArc]:
        """
        The open arcs of the circle not covered by this set, as closed-form
        :class:`CircularArc` values, ignoring gaps of length at most ``tol``. A gap
        running across angle 0 is reported once.
        """
        if self.is_empty:
            return [CircularArc(0.0, TAU)]
        linear = []
        cursor = 0.0
        for lo, hi in self.pieces:
            if lo > cursor:
                linear.append((cursor, lo))
            cursor = max(cursor, hi)
        if cursor < TAU:
            linear.append((cursor, TAU))
        if len(linear) > 1 and linear[0][0] == 0.0 and linear[-1][1] == TAU:
            first = linear.pop(0)
            last = linear.pop()
            linear.append((last[0], last[1] + (first[1] - first[0])))
        return [
            CircularArc(lo % TAU, hi - lo) for lo, hi in linear if hi - lo > tol
        ]

    def is_full(self, tol: float = ANGLE_TOL) -> bool:
        return not self.gaps(tol=tol)

    def circular_intervals(self) -> list[CircularArc]:
        """
        The set as disjoint circular arcs, with the pieces on either side of angle 0
        rejoined into one arc.
        """
        if self.is_empty:
            return []
        arcs = [CircularArc(lo, hi - lo) for lo, hi in self.pieces]
        if len(arcs) > 1 and self.pieces[0][0] == 0.0 and self.pieces[-1][1] == TAU:
            first = arcs.pop(0)
            last = arcs.pop()
            arcs.append(CircularArc(last.start, last.length + first.length))
        if len(arcs) == 1 and arcs[0].length >= TAU:
            return [CircularArc(0.0, TAU)]
        return arcs

    def rotated(self, angle: float, tol: float = ANGLE_TOL) -> ArcIntervalSet:
        """
        The set rotated counterclockwise by ``angle`` radians.
        """
        if self.is_full(tol=0.0):
            return self.full()
        arcs = self.circular_intervals()
        return self.union_all(
            (self.arc(a.start + angle, a.length, tol=tol) for a in arcs), tol=tol
        )

    def isclose(self, other: ArcIntervalSet, abs_tol: float = 1e-9) -> bool:
        """
        Whether both sets have the same pieces up to ``abs_tol`` in every endpoint.
        """
        if len(self.pieces) != len(other.pieces):
            return False
        return all(
            math.isclose(a, b, abs_tol=abs_tol)
            for p, q in zip(self.pieces, other.pieces)
            for a, b in zip(p, q)
        )


def halfplane_arc(normal_angle: float, offset: float, radius: float) -> ArcIntervalSet:
    """
    The angles θ for which the point at ``radius`` and angle θ lies in the closed
    halfplane ``⟨p, n⟩ ≥ offset`` with unit normal ``n`` at ``normal_angle``.

    Args:
      normal_angle : Direction of the halfplane's inward normal (radians)
      offset       : Signed distance of the bounding line from the origin along ``n``
      radius       : Radius of the circle, positive
    """
    tol_len = LENGTH_TOL * max(1.0, radius)
    if offset <= -radius + tol_len:
        return ArcIntervalSet.full()
    if offset > radius + tol_len:
        return ArcIntervalSet.empty()
    if offset >= radius - tol_len:
        return ArcIntervalSet.arc(normal_angle, 0.0)
    half = math.acos(offset / radius)
    return ArcIntervalSet.arc(normal_angle - half, 2 * half)


def ray_circle_arc(
    origin: PointXY, direction: float, radius: float
) -> ArcIntervalSet:
    """
    The (at most two) angles at which the halfline from ``origin`` in the direction
    ``direction`` meets the circle of the given ``radius``, as point arcs.
    """
    ux, uy = math.cos(direction), math.sin(direction)
    b = origin.x * ux + origin.y * uy
    c = origin.x**2 + origin.y**2 - radius**2
    disc = b * b - c
    tol_len = LENGTH_TOL * max(1.0, radius)
    if disc < -tol_len * max(1.0, radius):
        return ArcIntervalSet.empty()
    root = math.sqrt(max(disc, 0.0))
    hits = []
    for s in {-b - root, -b + root}:
        if s >= -tol_len:
            s = max(s, 0.0)
            x, y = origin.x + s * ux, origin.y + s * uy
            hits.append(ArcIntervalSet.arc(math.atan2(y, x), 0.0))
    return ArcIntervalSet.union_all(hits)
