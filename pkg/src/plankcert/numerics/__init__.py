from .quadrature import (
    DEFAULT_MAX_EVALUATIONS,
    DEFAULT_TOL,
    QuadratureResult,
    Singularity,
    SingularityHint,
    integrate,
)

__all__ = [
    "DEFAULT_MAX_EVALUATIONS",
    "DEFAULT_TOL",
    "QuadratureResult",
    "Singularity",
    "SingularityHint",
    "integrate",
]
