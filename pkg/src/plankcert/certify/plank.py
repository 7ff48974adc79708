from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from ..coverage import DEFAULT_RADIAL_STEPS, CoverageReport, check_disc_coverage
from ..geom import Strip
from ..measure import Method
from ..numerics import DEFAULT_TOL
from .hatbox import ZoneSpec, clipped_strip, hatbox_zone_area

__all__ = ["PLANK_BOUND", "PlankCertificate", "certify_plank"]

PLANK_BOUND = 2.0  # Minimal width of the unit disc
_SLACK_TOL = 1e-12

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlankCertificate:
    """
    Certificate for a family of strips covering the unit disc: the zones the strips
    cut from the unit sphere have areas ``2π·dᵢ`` and together cover the sphere (area
    4π), so the widths sum to at least 2.

    ``sum_widths`` is the sum of the widths as given and ``sum_clipped_widths`` that
    of the strips clipped to the disc, on which the verdict is taken. The verdict is
    not asserted (``vacuous``) when the family does not cover the disc.
    """

    sum_widths: float
    bound: float
    zone_areas: list[float]
    coverage: CoverageReport
    inequality_holds: bool
    sum_clipped_widths: float

    @property
    def vacuous(self) -> bool:
        return not self.coverage.covered

    @property
    def slack(self) -> float:
        return self.sum_clipped_widths - self.bound


def certify_plank(
    strips: Sequence[Strip],
    radial_steps: int = DEFAULT_RADIAL_STEPS,
    zone_method: Method = Method.CLOSED_FORM,
    tol: float = DEFAULT_TOL,
    n_cores: int = 1,
    show_progress: bool = False,
) -> PlankCertificate:
    """
    Check that ``strips`` cover the unit disc, then compare the sum of their widths with
    the bound 2 through the zone areas.

    Args:
      strips        : The strips
      radial_steps  : Radii checked for coverage (default: 512)
      zone_method   : How zone areas are computed (default: closed form)
      tol           : Quadrature tolerance for zone areas (default: 1e-10)
      n_cores       : Processes for the coverage check (default: 1)
      show_progress : Whether to show a tqdm progress bar (default: False)
    """
    coverage = check_disc_coverage(
        1.0,
        strips=strips,
        radial_steps=radial_steps,
        n_cores=n_cores,
        show_progress=show_progress,
    )
    clipped = [clipped_strip(s) for s in strips]
    zone_areas = [
        hatbox_zone_area(ZoneSpec(s), method=zone_method, tol=tol) for s in clipped
    ]
    sum_clipped = math.fsum(s.width for s in clipped)
    holds = sum_clipped >= PLANK_BOUND - _SLACK_TOL
    certificate = PlankCertificate(
        sum_widths=math.fsum(s.width for s in strips),
        bound=PLANK_BOUND,
        zone_areas=zone_areas,
        coverage=coverage,
        inequality_holds=holds,
        sum_clipped_widths=sum_clipped,
    )
    if certificate.vacuous:
        logger.info("Strips do not cover the unit disc: inequality not asserted")
    elif not holds:
        logger.error(f"Covering strips with width sum {sum_clipped!r} below the bound 2")
    return certificate
