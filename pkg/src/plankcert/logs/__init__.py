from pathlib import Path as _Path

from . import __path__ as _dir_nspath  # type: ignore

__all__ = ["logs_dir", "default_log_path"]

logs_dir = _Path(list(_dir_nspath)[0])

DEFAULT_LOG_NAME = "plankcert.log"


def default_log_path(name: str = DEFAULT_LOG_NAME) -> _Path:
    """
    Path of a log file in the package-internal logs directory.
    """
    return logs_dir / name
