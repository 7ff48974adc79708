from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import partial
from typing import Sequence, Union

from ..coverage import (
    DEFAULT_RADIAL_STEPS,
    CoverageReport,
    RegularizationResult,
    check_coverage,
    regularize,
)
from ..geom import AngularDomain, AnnulusConfig, RegularDomain, RegularWedge, view_angle
from ..measure import RadialProfile, mu_disc, mu_region
from ..numerics import DEFAULT_TOL
from ..share.multiproc_utils import batch_map

__all__ = ["AngularCertificate", "certify_angular"]

_SLACK_TOL = 1e-12

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AngularCertificate:
    """
    Certificate for a family of angular domains covering the disc T: the sum of their
    angles against the view angle ``2ε``, with the measure chain
    ``Σ μ(Dᵢ ∩ T) ≥ μ(T) = 2ε`` evaluated by quadrature alongside.

    Args:
      sum_angles         : Sum of the original angles
      view_angle         : ``2·arcsin(r/R)``
      coverage           : The coverage report (the verdict is vacuous unless covered)
      inequality_holds   : ``slack ≥ -1e-12``
      slack              : ``sum_angles - view_angle``
      regularized_angles : Angles of the regularized domains
      mu_values          : Quadrature measures of each domain ∩ T
      mu_sum             : Sum of ``mu_values``
      mu_disc            : Measure of T
      chain_residual     : ``mu_sum - mu_disc``
      ratio_violations   : Indices of domains whose regularized angle exceeds the
                           original
      regularizations    : The regularization result for each domain
    """

    sum_angles: float
    view_angle: float
    coverage: CoverageReport
    inequality_holds: bool
    slack: float
    regularized_angles: list[float]
    mu_values: list[float]
    mu_sum: float
    mu_disc: float
    chain_residual: float
    ratio_violations: list[int]
    regularizations: list[RegularizationResult]

    @property
    def vacuous(self) -> bool:
        return not self.coverage.covered


def _mu_of_domain(config: AnnulusConfig, tol: float, domain: AngularDomain) -> float:
    return mu_region(config, RadialProfile.from_domain(domain), radial_tol=tol).value


def certify_angular(
    config: AnnulusConfig,
    domains: Sequence[Union[AngularDomain, RegularDomain, RegularWedge]],
    radial_steps: int = DEFAULT_RADIAL_STEPS,
    n_cores: int = 1,
    show_progress: bool = False,
    mu_tol: float = DEFAULT_TOL,
) -> AngularCertificate:
    """
    Regularize every domain, check that the family covers T, and compare the sum of the
    original angles with the view angle. The measures of the domains' parts in T are
    computed by quadrature for the measure chain.

    Args:
      config        : The annulus
      domains       : The angular domains, each with vertex within the outer circle
      radial_steps  : Radii checked for coverage (default: 512)
      n_cores       : Processes for the coverage check and measures (default: 1)
      show_progress : Whether to show tqdm progress bars (default: False)
      mu_tol        : Quadrature tolerance per measure (default: 1e-10)
    """
    angular = [d if isinstance(d, AngularDomain) else d.as_angular() for d in domains]
    regularized = [regularize(config, d) for d in angular]
    coverage = check_coverage(
        config,
        domains=domains,
        radial_steps=radial_steps,
        n_cores=n_cores,
        show_progress=show_progress,
    )
    mu_values = batch_map(
        partial(_mu_of_domain, config, mu_tol),
        angular,
        n_cores=n_cores,
        chunk_size=1,
        show_progress=show_progress,
        tqdm_desc="Measuring domains",
    )
    sum_angles = math.fsum(d.sweep for d in angular)
    view = view_angle(config)
    slack = sum_angles - view
    mu_sum = math.fsum(mu_values)
    disc = mu_disc(config)
    certificate = AngularCertificate(
        sum_angles=sum_angles,
        view_angle=view,
        coverage=coverage,
        inequality_holds=slack >= -_SLACK_TOL,
        slack=slack,
        regularized_angles=[result.regular.angle for result in regularized],
        mu_values=mu_values,
        mu_sum=mu_sum,
        mu_disc=disc,
        chain_residual=mu_sum - disc,
        ratio_violations=[i for i, res in enumerate(regularized) if res.ratio_violated],
        regularizations=regularized,
    )
    if not certificate.vacuous and not certificate.inequality_holds:
        logger.error(f"Covering family with angle sum {sum_angles!r} below {view!r}")
    return certificate
