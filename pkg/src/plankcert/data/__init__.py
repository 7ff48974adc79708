from pathlib import Path as _Path

from . import __path__ as _dir_nspath  # type: ignore

__all__ = ["scenes_dir", "scene_names", "scene_path"]

_dir_path = _Path(list(_dir_nspath)[0])
scenes_dir = _dir_path / "scenes"


def scene_names() -> list[str]:
    return sorted(p.stem for p in scenes_dir.glob("*.json"))


def scene_path(name: str) -> _Path:
    """
    Path to one of the example scenes shipped with the package (by file stem, e.g.
    ``"default"``).
    """
    path = scenes_dir / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"No scene {name!r}: choose from {scene_names()}")
    return path
