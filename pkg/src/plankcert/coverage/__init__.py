from .check import (
    DEFAULT_RADIAL_STEPS,
    CoverageReport,
    check_coverage,
    check_disc_coverage,
    check_radii,
    critical_radii,
    cross_section,
    radii_grid,
)
from .decompose import chord_quadrilateral, strip_to_regular_domains
from .regularize import (
    DEFAULT_BOUNDARY_SAMPLES,
    RegularizationResult,
    boundary_samples,
    regularize,
)

__all__ = [
    "DEFAULT_BOUNDARY_SAMPLES",
    "DEFAULT_RADIAL_STEPS",
    "CoverageReport",
    "RegularizationResult",
    "boundary_samples",
    "check_coverage",
    "check_disc_coverage",
    "check_radii",
    "chord_quadrilateral",
    "critical_radii",
    "cross_section",
    "radii_grid",
    "regularize",
    "strip_to_regular_domains",
]
