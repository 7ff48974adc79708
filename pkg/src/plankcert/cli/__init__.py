from . import commands, render, scene
from .main import main, run

__all__ = ["commands", "render", "scene", "main", "run"]
