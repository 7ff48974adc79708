from .arcs import (
    ANGLE_TOL,
    LENGTH_TOL,
    ArcIntervalSet,
    CircularArc,
    halfplane_arc,
    ray_circle_arc,
)
from .domains import (
    AngularDomain,
    RegularDomain,
    RegularWedge,
    Shape,
    Strip,
    arc_intersection,
    contains,
    make_regular,
    signed_distance,
    strip_arc_intersection,
)
from .primitives import TAU, AnnulusConfig, PointXY, unit, view_angle

__all__ = [
    "ANGLE_TOL",
    "LENGTH_TOL",
    "TAU",
    "AnnulusConfig",
    "AngularDomain",
    "ArcIntervalSet",
    "CircularArc",
    "PointXY",
    "RegularDomain",
    "RegularWedge",
    "Shape",
    "Strip",
    "arc_intersection",
    "contains",
    "halfplane_arc",
    "make_regular",
    "ray_circle_arc",
    "signed_distance",
    "strip_arc_intersection",
    "unit",
    "view_angle",
]
