from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable

from ..coverage import DEFAULT_RADIAL_STEPS
from ..errors import (
    ConfigError,
    DomainRangeError,
    IntegrationError,
    PreconditionError,
    SceneValidationError,
    UnsupportedInputError,
)
from ..logger import Log, Logger
from ..numerics import DEFAULT_TOL
from .commands import (
    EXIT_INPUT_ERROR,
    EXIT_IO_ERROR,
    EXIT_VIOLATION,
    cmd_certify,
    cmd_check_coverage,
    cmd_measure,
    cmd_oracle_compare,
    cmd_render,
)
from .render import DEFAULT_RESOLUTION

__all__ = ["build_parser", "main", "run"]

_INPUT_ERRORS = (
    SceneValidationError,
    ConfigError,
    DomainRangeError,
    PreconditionError,
    UnsupportedInputError,
)

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, Logger], int]


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("scene", type=Path, help="Scene JSON file")
    parent.add_argument("--json", action="store_true", help="Print a JSON report")
    parent.add_argument("--seed", type=int, default=0, help="Seed for random sampling")
    parent.add_argument(
        "--log-file", dest="log_file", type=Path, help="Log file (default: package logs)"
    )
    parent.add_argument("--cores", type=int, default=1, help="Worker processes")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plankcert",
        description="Measure, check and certify coverings of the disc of radius r.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()

    measure = sub.add_parser("measure", parents=[common], help="μ of each domain")
    measure.add_argument("--method", choices=["closed", "quad", "both"], default="both")
    measure.add_argument("--tol", type=float, default=DEFAULT_TOL)
    measure.set_defaults(func=cmd_measure)

    coverage = sub.add_parser(
        "check-coverage", parents=[common], help="Check the disc is covered"
    )
    coverage.add_argument(
        "--radial-steps", dest="radial_steps", type=int, default=DEFAULT_RADIAL_STEPS
    )
    coverage.set_defaults(func=cmd_check_coverage)

    certify = sub.add_parser("certify", parents=[common], help="Certify an inequality")
    certify.add_argument("--theorem", choices=["angular", "plank"], default="angular")
    certify.add_argument(
        "--radial-steps", dest="radial_steps", type=int, default=DEFAULT_RADIAL_STEPS
    )
    certify.add_argument("--save", type=Path, help="Also write the JSON certificate")
    certify.add_argument(
        "--limit-radii",
        dest="limit_radii",
        type=float,
        nargs="+",
        help="Outer radii (≥ 2) for the plank limit table",
    )
    certify.set_defaults(func=cmd_certify)

    render = sub.add_parser("render", parents=[common], help="Draw the scene as SVG")
    render.add_argument("--out", type=Path, required=True)
    render.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    render.add_argument(
        "--certificate", type=Path, help="Certificate whose witness to mark"
    )
    render.set_defaults(func=cmd_render)

    oracle = sub.add_parser(
        "oracle-compare", parents=[common], help="Closed forms against quadrature"
    )
    oracle.add_argument("--grid", type=int, default=50)
    oracle.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Run one subcommand and return its exit code: 0 ok, 1 not covered, 2 input error,
    3 identity or inequality violation (or a failed quadrature), 4 I/O error.
    """
    args = build_parser().parse_args(argv)
    log = Logger(name=__name__, path=args.log_file)
    logger.info(f"{args.command} {args.scene}")
    command: Command = args.func
    try:
        exit_code = command(args, log)
    except KeyboardInterrupt:
        log.halt()
        raise
    except _INPUT_ERRORS as exc:
        log.error(Log.RoutineException, msg="Input error: ", err=exc)
        print(f"plankcert: {exc}", file=sys.stderr)
        log.close()
        return EXIT_INPUT_ERROR
    except IntegrationError as exc:
        # Includes an exhausted evaluation budget
        log.error(Log.RoutineException, msg="Quadrature failure: ", err=exc)
        print(f"plankcert: {exc}", file=sys.stderr)
        log.close()
        return EXIT_VIOLATION
    except OSError as exc:
        log.error(Log.RoutineException, msg="I/O error: ", err=exc)
        print(f"plankcert: {exc}", file=sys.stderr)
        log.close()
        return EXIT_IO_ERROR
    logger.info(f"{args.command} exited with {exit_code}")
    log.complete()
    return exit_code


def run() -> None:
    sys.exit(main())
