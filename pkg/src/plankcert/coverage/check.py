from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import partial
from typing import Optional, Sequence

import numpy as np

from ..errors import PreconditionError
from ..geom import (
    ANGLE_TOL,
    AngularDomain,
    AnnulusConfig,
    ArcIntervalSet,
    CircularArc,
    PointXY,
    Shape,
    Strip,
    arc_intersection,
    strip_arc_intersection,
)
from ..share.multiproc_utils import batch_map

__all__ = [
    "DEFAULT_RADIAL_STEPS",
    "SEAM_LENGTH_TOL",
    "CoverageReport",
    "radii_grid",
    "critical_radii",
    "check_radii",
    "cross_section",
    "check_disc_coverage",
    "check_coverage",
]

DEFAULT_RADIAL_STEPS = 512
SEAM_LENGTH_TOL = 1e-10  # Plane units
PARALLEL_TOL = 1e-12

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageReport:
    """
    Verdict of a coverage check of the disc of a given radius. When not ``covered``
    the ``witness`` is a point of the disc outside every input set (checked with the
    exact membership predicates) and ``failing_radius`` is the radius it was found at.

    ``min_slack`` is the length (radians) of the smallest genuine uncovered arc found
    at any failing radius, zero when covered.
    """

    covered: bool
    witness: Optional[PointXY]
    radii_checked: int
    min_slack: float
    failing_radius: Optional[float] = None


def radii_grid(radius: float, radial_steps: int = DEFAULT_RADIAL_STEPS) -> np.ndarray:
    """
    Radii at which to check coverage: half spaced linearly from ``radius·1e-6`` to
    ``radius``, half geometrically concentrated towards ``radius`` (down to
    ``radius·1e-9`` below it), always including ``radius`` itself.
    """
    if radial_steps < 2:
        raise PreconditionError(f"Need radial_steps ≥ 2, got {radial_steps=}")
    n_linear = radial_steps // 2
    linear = np.linspace(radius * 1e-6, radius, n_linear)
    near_edge = radius - radius * np.geomspace(0.5, 1e-9, radial_steps - n_linear)
    return np.unique(np.concatenate([linear, near_edge, [radius]]))


def cross_section(shape: Shape, rho: float) -> ArcIntervalSet:
    if isinstance(shape, Strip):
        return strip_arc_intersection(shape, rho)
    return arc_intersection(shape, rho)


def _bounding_lines(shape: Shape) -> tuple[list[tuple[float, float, float]], list[float]]:
    """
    The lines ``⟨p, n⟩ = c`` (as ``(n_x, n_y, c)``) that bound ``shape``, with the
    norms of its vertices.
    """
    if isinstance(shape, Strip):
        nx, ny = shape.normal
        return [(nx, ny, shape.offset_low), (nx, ny, shape.offset_high)], []
    wedge = shape if isinstance(shape, AngularDomain) else shape.as_angular()
    v = wedge.vertex
    directions = [wedge.start_direction]
    if 0 < wedge.sweep < math.pi:
        directions.append(wedge.end_direction)
    lines = []
    for direction in directions:
        nx, ny = -math.sin(direction), math.cos(direction)
        lines.append((nx, ny, nx * v.x + ny * v.y))
    return lines, [v.norm]


def critical_radii(shapes: Sequence[Shape], radius: float) -> np.ndarray:
    """
    Radii in (0, ``radius``] at which the arcs of the shapes' cross-sections can change
    their order around the circle: vertex norms, distances from the origin to every
    bounding line, and norms of the crossing points of pairs of bounding lines. Between
    consecutive critical radii the union of the cross-sections is either the whole
    circle at every radius or at none.
    """
    lines: list[tuple[float, float, float]] = []
    radii: list[float] = []
    for shape in shapes:
        shape_lines, vertex_norms = _bounding_lines(shape)
        lines.extend(shape_lines)
        radii.extend(vertex_norms)
    if lines:
        table = np.array(lines)
        n, c = table[:, :2], table[:, 2]
        radii.extend(np.abs(c))
        i, j = np.triu_indices(len(table), k=1)
        det = n[i, 0] * n[j, 1] - n[i, 1] * n[j, 0]
        crossing = np.abs(det) > PARALLEL_TOL
        i, j, det = i[crossing], j[crossing], det[crossing]
        x = (c[i] * n[j, 1] - c[j] * n[i, 1]) / det
        y = (n[i, 0] * c[j] - n[j, 0] * c[i]) / det
        radii.extend(np.hypot(x, y))
    found = np.asarray(radii, dtype=float)
    return np.unique(found[(found > 0) & (found <= radius)])


def check_radii(
    radius: float, shapes: Sequence[Shape], radial_steps: int = DEFAULT_RADIAL_STEPS
) -> np.ndarray:
    """
    The radii :func:`check_disc_coverage` checks: the :func:`radii_grid` together with
    the :func:`critical_radii` above the grid's smallest radius and the midpoint of each
    pair of consecutive critical radii.
    """
    grid = radii_grid(radius, radial_steps)
    floor = grid[0]
    critical = critical_radii(shapes, radius)
    knots = np.unique(np.concatenate([[floor], critical[critical > floor], [radius]]))
    midpoints = (knots[:-1] + knots[1:]) / 2
    return np.unique(np.concatenate([grid, knots, midpoints]))


def _genuine_gaps(shapes: Sequence[Shape], rho: float) -> list[CircularArc]:
    """
    The uncovered arcs at radius ``rho``, largest first. Gaps shorter than
    ``SEAM_LENGTH_TOL`` or whose midpoint lies in one of the shapes are floating point
    seams between touching arcs, and are dropped.
    """
    covered = ArcIntervalSet.union_all(cross_section(s, rho) for s in shapes)
    genuine = []
    for gap in covered.gaps(tol=ANGLE_TOL):
        midpoint = PointXY.polar(rho, gap.midpoint)
        if rho * gap.length <= SEAM_LENGTH_TOL or any(s.contains(midpoint) for s in shapes):
            logger.debug(f"Discarded seam of {gap.length:.3g} rad at radius {rho!r}")
            continue
        genuine.append(gap)
    return sorted(genuine, key=lambda gap: gap.length, reverse=True)


def check_disc_coverage(
    radius: float,
    domains: Sequence[Shape] = (),
    strips: Sequence[Strip] = (),
    radial_steps: int = DEFAULT_RADIAL_STEPS,
    n_cores: int = 1,
    show_progress: bool = False,
) -> CoverageReport:
    """
    Check whether the closed disc of the given ``radius`` about the origin is covered
    by the union of ``domains`` and ``strips``.

    Each radius of :func:`check_radii` is checked exactly (the union of the shapes'
    cross-sections must be the whole circle up to hairline seams), and the centre is
    checked by exact membership. Since the checked radii include every critical radius
    and a radius strictly between each consecutive pair, a gap anywhere in the annulus
    from ``radius·1e-6`` out to ``radius`` shows up at some checked radius.

    Args:
      radius        : Radius of the disc to cover
      domains       : Angular domains (of any representation)
      strips        : Strips
      radial_steps  : Size of the regular part of the grid, at least 2 (default: 512)
      n_cores       : Processes for the per-radius checks (default: 1, serial)
      show_progress : Whether to show a tqdm progress bar (default: False)
    """
    shapes: list[Shape] = [*domains, *strips]
    radii = check_radii(radius, shapes, radial_steps)
    centre = PointXY(0.0, 0.0)
    if not any(s.contains(centre) for s in shapes):
        logger.info("Centre of the disc is uncovered")
        return CoverageReport(False, centre, len(radii), 0.0, failing_radius=0.0)
    gaps_per_radius = batch_map(
        partial(_genuine_gaps, shapes),
        (float(rho) for rho in radii),
        n_cores=n_cores,
        show_progress=show_progress,
        tqdm_desc="Checking radii",
    )
    failing = [(rho, gaps) for rho, gaps in zip(radii, gaps_per_radius) if gaps]
    if not failing:
        logger.info(f"Covered at all {len(radii)} radii")
        return CoverageReport(True, None, len(radii), 0.0)
    rho, gaps = failing[0]
    witness = PointXY.polar(float(rho), gaps[0].midpoint)
    min_slack = min(gap.length for _, radius_gaps in failing for gap in radius_gaps)
    logger.info(
        f"Uncovered at {len(failing)} of {len(radii)} radii; first at {rho!r} with "
        f"a gap of {gaps[0].length:.3g} rad, witness ({witness.x!r}, {witness.y!r})"
    )
    return CoverageReport(False, witness, len(radii), min_slack, failing_radius=float(rho))


def check_coverage(
    config: AnnulusConfig,
    domains: Sequence[Shape] = (),
    strips: Sequence[Strip] = (),
    radial_steps: int = DEFAULT_RADIAL_STEPS,
    n_cores: int = 1,
    show_progress: bool = False,
) -> CoverageReport:
    """
    Check whether the disc T (radius ``config.r``) is covered by the given angular
    domains and strips (see :func:`check_disc_coverage`).
    """
    return check_disc_coverage(
        config.r,
        domains=domains,
        strips=strips,
        radial_steps=radial_steps,
        n_cores=n_cores,
        show_progress=show_progress,
    )
