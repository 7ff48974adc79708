from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import ConfigError, DomainRangeError

__all__ = ["PointXY", "AnnulusConfig", "view_angle", "unit", "TAU"]

TAU = 2 * math.pi


def unit(angle: float) -> tuple[float, float]:
    """
    The unit vector at ``angle`` radians from the positive x-axis.
    """
    return (math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class PointXY:
    x: float
    y: float

    def __post_init__(self):
        for name, value in (("x", self.x), ("y", self.y)):
            if not math.isfinite(value):
                raise DomainRangeError(name=name, value=value, domain="finite reals")

    @classmethod
    def polar(cls, radius: float, angle: float) -> PointXY:
        return cls(radius * math.cos(angle), radius * math.sin(angle))

    @property
    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    @property
    def angle(self) -> float:
        """
        Polar angle in [0, 2π).
        """
        return math.atan2(self.y, self.x) % TAU

    def dot(self, direction: tuple[float, float]) -> float:
        return self.x * direction[0] + self.y * direction[1]

    def __sub__(self, other: PointXY) -> tuple[float, float]:
        return (self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class AnnulusConfig:
    """
    The concentric circles k (radius ``r``) and K (radius ``R``) centred on the origin.
    The closed disc bounded by k is the target disc T.

    Args:
      r : Inner radius (of k and T)
      R : Outer radius (of K)
    """

    r: float = 1.0
    R: float = 2.0

    def __post_init__(self):
        valid = math.isfinite(self.r) and math.isfinite(self.R)
        if not (valid and 0 < self.r < self.R):
            raise ConfigError(r=self.r, R=self.R)

    @property
    def epsilon(self) -> float:
        """
        Half the angle subtended by k from any point of K, ``arcsin(r/R)``.
        """
        return math.asin(self.r / self.R)

    @property
    def view_angle(self) -> float:
        return view_angle(self)


def view_angle(config: AnnulusConfig) -> float:
    """
    The angle ``2·arcsin(r/R)`` under which the inner circle is seen from the outer one.
    """
    return 2 * config.epsilon
