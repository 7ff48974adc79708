from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Literal, Tuple, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    model_validator,
)

from ..errors import SceneValidationError
from ..geom import AngularDomain, AnnulusConfig, PointXY, RegularDomain, Strip

__all__ = [
    "SCENE_VERSION",
    "ConfigModel",
    "WedgeModel",
    "RegularModel",
    "StripModel",
    "SceneFile",
    "Scene",
    "parse_scene",
    "load_scene",
    "dump_scene",
]

SCENE_VERSION = 1

_ALPHA_TOL = 1e-12


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", allow_inf_nan=False, frozen=True)


class ConfigModel(_Model):
    r: float = 1.0
    R: float = 2.0

    @model_validator(mode="after")
    def check_radii(self) -> ConfigModel:
        if not 0 < self.r < self.R:
            raise ValueError(f"Invariant 0 < r < R violated: r={self.r!r}, R={self.R!r}")
        return self


class WedgeModel(_Model):
    """
    An angular domain given by its vertex, first halfline direction and sweep.
    """

    vertex: Tuple[float, float]
    start_angle: float
    sweep: float

    @field_validator("sweep")
    @classmethod
    def check_sweep(cls, value: float) -> float:
        if not 0 <= value <= math.pi:
            raise ValueError(f"Invariant 0 ≤ sweep ≤ π violated: sweep={value!r}")
        return value


class RegularModel(_Model):
    """
    A tangent-type regular domain (the bound ``alpha ≤ 2ε`` is checked against the
    scene's config).
    """

    vertex_angle: float
    chirality: Literal[-1, 1]
    alpha: float = Field(ge=0)


class StripModel(_Model):
    normal_angle: float
    offset_low: float
    offset_high: float

    @model_validator(mode="after")
    def check_offsets(self) -> StripModel:
        if not self.offset_low <= self.offset_high:
            raise ValueError(
                "Invariant offset_low ≤ offset_high violated: "
                f"{self.offset_low!r} > {self.offset_high!r}"
            )
        return self


DomainModel = Union[WedgeModel, RegularModel]


@dataclass(frozen=True)
class Scene:
    """
    A validated scene as geometry objects.
    """

    config: AnnulusConfig
    domains: List[Union[AngularDomain, RegularDomain]] = field(default_factory=list)
    strips: List[Strip] = field(default_factory=list)
    metadata: Dict[str, str] = field(default_factory=dict)


class SceneFile(_Model):
    """
    The JSON scene format: an annulus config, angular domains (general or regular),
    strips and free-form string metadata. Angles are in radians.
    """

    version: Literal[1] = SCENE_VERSION
    config: ConfigModel = ConfigModel()
    domains: List[DomainModel] = []
    strips: List[StripModel] = []
    metadata: Dict[str, str] = {}

    @model_validator(mode="after")
    def check_regular_angles(self) -> SceneFile:
        two_eps = 2 * math.asin(self.config.r / self.config.R)
        for i, domain in enumerate(self.domains):
            if isinstance(domain, RegularModel) and domain.alpha > two_eps + _ALPHA_TOL:
                raise ValueError(
                    f"domains.{i}.alpha: invariant alpha ≤ 2·arcsin(r/R) = {two_eps!r} "
                    f"violated: alpha={domain.alpha!r}"
                )
        return self

    def build(self) -> Scene:
        config = AnnulusConfig(self.config.r, self.config.R)
        domains: list[Union[AngularDomain, RegularDomain]] = []
        for d in self.domains:
            if isinstance(d, WedgeModel):
                domains.append(AngularDomain(PointXY(*d.vertex), d.start_angle, d.sweep))
            else:
                alpha = min(d.alpha, config.view_angle)
                domains.append(RegularDomain(config, d.vertex_angle, d.chirality, alpha))
        strips = [Strip(s.normal_angle, s.offset_low, s.offset_high) for s in self.strips]
        return Scene(config, domains, strips, dict(self.metadata))


def _problems(exc: ValidationError) -> list[tuple[str, str]]:
    return [
        (".".join(str(part) for part in error["loc"]), error["msg"])
        for error in exc.errors()
    ]


def parse_scene(text: str, source: str = "scene") -> SceneFile:
    """
    Validate scene JSON, raising :class:`~plankcert.errors.SceneValidationError` with
    the field path of every problem found.
    """
    try:
        return SceneFile.model_validate_json(text)
    except ValidationError as exc:
        raise SceneValidationError(_problems(exc), source=source) from exc


def load_scene(path: Path) -> SceneFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SceneValidationError([("", f"cannot read: {exc}")], source=str(path)) from exc
    return parse_scene(text, source=str(path))


def dump_scene(scene: SceneFile) -> str:
    return scene.model_dump_json(indent=2)
