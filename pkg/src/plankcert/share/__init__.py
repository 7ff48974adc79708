from . import multiproc_utils

__all__ = ["multiproc_utils"]
