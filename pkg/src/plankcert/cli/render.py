from __future__ import annotations

import math
import os
import tempfile
from pathlib import Path
from typing import Optional

import drawsvg as draw

from ..geom import AngularDomain, PointXY, Strip
from .scene import Scene

__all__ = ["DEFAULT_RESOLUTION", "render_scene", "write_atomic"]

DEFAULT_RESOLUTION = 800

_INNER_STROKE = "#1f4e79"
_OUTER_STROKE = "#7f7f7f"
_DOMAIN_FILL = "#e07b39"
_STRIP_FILL = "#3a9d5d"
_WITNESS_FILL = "#c00000"
_ARC_SEGMENTS = 64


def _wedge_points(domain: AngularDomain, reach: float) -> list[float]:
    """
    Flat ``x, y`` coordinates (y flipped for SVG) of the wedge cut off at distance
    ``reach`` from its vertex.
    """
    v = domain.vertex
    coords = [v.x, -v.y]
    n = max(2, int(_ARC_SEGMENTS * domain.sweep / math.pi) + 2)
    for k in range(n):
        theta = domain.start_direction + domain.sweep * k / (n - 1)
        coords += [v.x + reach * math.cos(theta), -(v.y + reach * math.sin(theta))]
    return coords


def _strip_points(strip: Strip, reach: float) -> list[float]:
    nx, ny = strip.normal
    tx, ty = -ny, nx
    corners = [
        (strip.offset_low, -reach),
        (strip.offset_low, reach),
        (strip.offset_high, reach),
        (strip.offset_high, -reach),
    ]
    coords: list[float] = []
    for c, s in corners:
        coords += [c * nx + s * tx, -(c * ny + s * ty)]
    return coords


def render_scene(
    scene: Scene,
    resolution: int = DEFAULT_RESOLUTION,
    witness: Optional[PointXY] = None,
) -> str:
    """
    Draw the scene as SVG text: the circles k and K, every domain and strip (cut off at
    the edge of the view), and the witness point if given. The output depends only on
    the inputs.

    Args:
      scene      : The scene to draw
      resolution : Width and height of the rendered image in pixels (default: 800)
      witness    : An uncovered point from a certificate, marked in red
    """
    config = scene.config
    extent = 1.15 * max(
        [config.R] + [d.vertex.norm for d in scene.domains if isinstance(d, AngularDomain)]
    )
    reach = 4 * extent
    stroke = extent / 250
    d = draw.Drawing(2 * extent, 2 * extent, origin="center")
    d.set_render_size(resolution, resolution)
    d.append(draw.Rectangle(-extent, -extent, 2 * extent, 2 * extent, fill="white"))
    for strip in scene.strips:
        d.append(
            draw.Lines(
                *_strip_points(strip, reach),
                close=True,
                fill=_STRIP_FILL,
                fill_opacity=0.25,
                stroke=_STRIP_FILL,
                stroke_width=stroke,
            )
        )
    for domain in scene.domains:
        wedge = domain if isinstance(domain, AngularDomain) else domain.as_angular()
        d.append(
            draw.Lines(
                *_wedge_points(wedge, reach),
                close=True,
                fill=_DOMAIN_FILL,
                fill_opacity=0.25,
                stroke=_DOMAIN_FILL,
                stroke_width=stroke,
            )
        )
    for radius, colour, width in (
        (config.R, _OUTER_STROKE, stroke),
        (config.r, _INNER_STROKE, 2 * stroke),
    ):
        d.append(draw.Circle(0, 0, radius, fill="none", stroke=colour, stroke_width=width))
    if witness is not None:
        d.append(
            draw.Circle(
                witness.x, -witness.y, 4 * stroke, fill=_WITNESS_FILL, id="witness"
            )
        )
    return d.as_svg()


def write_atomic(path: Path, text: str) -> None:
    """
    Write ``text`` to ``path`` through a temporary file in the same directory, replaced
    onto ``path`` so that readers never see a partial file.
    """
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
