from .density import (
    MeasureResult,
    Method,
    antiderivative_G,
    density,
    radial_profile_integral,
)
from .mu import mu_centered_disc, mu_disc, mu_region, mu_regular, mu_wedge
from .profile import RadialProfile

__all__ = [
    "MeasureResult",
    "Method",
    "RadialProfile",
    "antiderivative_G",
    "density",
    "mu_centered_disc",
    "mu_disc",
    "mu_region",
    "mu_regular",
    "mu_wedge",
    "radial_profile_integral",
]
