from pytest import fixture

from plankcert.data import scene_path
from plankcert.geom import AnnulusConfig


@fixture(scope="session")
def config():
    """
    The reference annulus r = 1, R = 2 (so ε = π/6 and the view angle is π/3).
    """
    return AnnulusConfig(r=1.0, R=2.0)


@fixture(scope="session")
def wide_config():
    return AnnulusConfig(r=1.0, R=50.0)


@fixture
def log_file(tmp_path):
    return tmp_path / "plankcert.log"


@fixture(scope="session")
def default_scene():
    return scene_path("default")


@fixture(scope="session")
def punctured_scene():
    return scene_path("punctured")


@fixture(scope="session")
def plank_scene():
    return scene_path("plank_partition")
