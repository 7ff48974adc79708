from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path
from typing import Any, Optional

from humanfriendly.tables import format_pretty_table

from ..certify import (
    NEAR_SINGULAR_TOL,
    ORACLE_TOL,
    AngularCertificate,
    LimitTable,
    OracleRow,
    PlankCertificate,
    certify_angular,
    certify_plank,
    limit_derivation_check,
    oracle_compare,
)
from ..coverage import CoverageReport, check_coverage, strip_to_regular_domains
from ..errors import SceneValidationError
from ..geom import PointXY, RegularDomain
from ..logger import Log, Logger
from ..measure import Method, RadialProfile, mu_disc, mu_region, mu_regular
from .render import render_scene, write_atomic
from .scene import Scene, load_scene

__all__ = [
    "EXIT_OK",
    "EXIT_NOT_COVERED",
    "EXIT_INPUT_ERROR",
    "EXIT_VIOLATION",
    "EXIT_IO_ERROR",
    "cmd_measure",
    "cmd_check_coverage",
    "cmd_certify",
    "cmd_render",
    "cmd_oracle_compare",
]

EXIT_OK = 0
EXIT_NOT_COVERED = 1
EXIT_INPUT_ERROR = 2
EXIT_VIOLATION = 3
EXIT_IO_ERROR = 4

_EQUALITY_TOL = 1e-9

logger = logging.getLogger(__name__)


def _load(args: argparse.Namespace, log: Logger) -> Scene:
    scene = load_scene(args.scene).build()
    log.add(
        Log.SceneLoaded,
        msg=(
            f"{args.scene}: r={scene.config.r!r}, R={scene.config.R!r}, "
            f"{len(scene.domains)} domain(s), {len(scene.strips)} strip(s)"
        ),
    )
    return scene


def _emit(args: argparse.Namespace, payload: dict[str, Any], text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _point(p: Optional[PointXY]) -> Optional[dict[str, float]]:
    return None if p is None else {"x": p.x, "y": p.y}


def coverage_dict(report: CoverageReport) -> dict[str, Any]:
    return {
        "covered": report.covered,
        "witness": _point(report.witness),
        "radii_checked": report.radii_checked,
        "min_slack": report.min_slack,
        "failing_radius": report.failing_radius,
    }


def _coverage_text(report: CoverageReport) -> str:
    if report.covered:
        return f"Covered (checked {report.radii_checked} radii and the centre)"
    assert report.witness is not None  # Always set when uncovered, give mypy a clue
    w = report.witness
    return (
        f"NOT covered: witness ({w.x:.12g}, {w.y:.12g}) at radius "
        f"{report.failing_radius!r}, smallest gap {report.min_slack:.3g} rad "
        f"(checked {report.radii_checked} radii)"
    )


def _verdict(vacuous: bool, holds: bool) -> str:
    if vacuous:
        return "not asserted"
    return "holds" if holds else "VIOLATED"


def angular_dict(cert: AngularCertificate) -> dict[str, Any]:
    return {
        "theorem": "angular",
        "verdict": _verdict(cert.vacuous, cert.inequality_holds),
        "sum_angles": cert.sum_angles,
        "view_angle": cert.view_angle,
        "slack": cert.slack,
        "inequality_holds": cert.inequality_holds,
        "equality": abs(cert.slack) <= _EQUALITY_TOL,
        "regularized_angles": cert.regularized_angles,
        "mu_values": cert.mu_values,
        "mu_sum": cert.mu_sum,
        "mu_disc": cert.mu_disc,
        "chain_residual": cert.chain_residual,
        "ratio_violations": cert.ratio_violations,
        "coverage": coverage_dict(cert.coverage),
    }


def plank_dict(cert: PlankCertificate) -> dict[str, Any]:
    return {
        "theorem": "plank",
        "verdict": _verdict(cert.vacuous, cert.inequality_holds),
        "sum_widths": cert.sum_widths,
        "sum_clipped_widths": cert.sum_clipped_widths,
        "bound": cert.bound,
        "slack": cert.slack,
        "inequality_holds": cert.inequality_holds,
        "equality": abs(cert.slack) <= _EQUALITY_TOL,
        "zone_areas": cert.zone_areas,
        "coverage": coverage_dict(cert.coverage),
    }


def limit_dict(table: LimitTable) -> dict[str, Any]:
    return {
        "monotone": table.monotone,
        "holds": table.holds,
        "rows": [
            {
                "R": row.R,
                "width_bound": row.width_bound,
                "wedge_angle_sum": row.wedge_angle_sum,
                "view_angle": row.view_angle,
                "sine_bound": row.sine_bound,
                "implied_bound": row.implied_bound,
                "links": list(row.links),
                "wedge_bound_violations": row.wedge_bound_violations,
                "covered": row.covered,
            }
            for row in table.rows
        ],
    }


def oracle_dict(rows: list[OracleRow]) -> dict[str, Any]:
    return {
        "passed": all(row.passed for row in rows),
        "rows": [
            {
                "identity": row.identity,
                "max_residual": row.max_residual,
                "tolerance": row.tolerance,
                "passed": row.passed,
                "detail": row.detail,
            }
            for row in rows
        ],
    }


def cmd_measure(args: argparse.Namespace, log: Logger) -> int:
    """
    Print μ of each domain and strip intersected with T, by closed form (regular
    domains only), quadrature, or both.
    """
    scene = _load(args, log)
    config = scene.config
    closed = args.method in ("closed", "both")
    quad = args.method in ("quad", "both")
    entries = []
    disagreements = 0
    for i, domain in enumerate(scene.domains):
        entry: dict[str, Any] = {"name": f"domain[{i}]"}
        if isinstance(domain, RegularDomain):
            entry["kind"] = "regular"
            if closed:
                entry["closed_form"] = mu_regular(config, domain, Method.CLOSED_FORM).value
            if quad:
                result = mu_regular(config, domain, Method.QUADRATURE, tol=args.tol)
                entry["quadrature"] = result.value
                entry["error_estimate"] = result.error_estimate
            if closed and quad:
                near = config.r - abs(domain.signed_distance) < 1e-3 * config.r
                tolerance = NEAR_SINGULAR_TOL if near else ORACLE_TOL
                if abs(entry["closed_form"] - entry["quadrature"]) > tolerance:
                    disagreements += 1
                    log.error(
                        Log.IdentityViolation,
                        msg=f"{entry['name']}: closed form and quadrature disagree",
                    )
        else:
            entry["kind"] = "wedge"
            if quad:
                result = mu_region(config, RadialProfile.from_domain(domain), args.tol)
                entry["quadrature"] = result.value
                entry["error_estimate"] = result.error_estimate
        entries.append(entry)
    for i, strip in enumerate(scene.strips):
        entry = {"name": f"strip[{i}]", "kind": "strip"}
        if quad:
            result = mu_region(config, RadialProfile.from_strip(strip), args.tol)
            entry["quadrature"] = result.value
            entry["error_estimate"] = result.error_estimate
        entries.append(entry)
    log.add(Log.Measure, msg=f"{len(entries)} measure(s)", since=Log.SceneLoaded)
    disc = mu_disc(config)
    payload = {"method": args.method, "mu_disc": disc, "entries": entries}
    columns = ["name", "kind", "closed_form", "quadrature", "error_estimate"]
    rows = [[_cell(entry.get(c)) for c in columns] for entry in entries]
    table = format_pretty_table(rows, columns) if rows else "(no domains or strips)"
    _emit(args, payload, f"{table}\nμ(T) = {disc!r}")
    return EXIT_VIOLATION if disagreements else EXIT_OK


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _log_coverage(log: Logger, report: CoverageReport) -> None:
    log.add(Log.CoverageCheck, msg=_coverage_text(report), since=Log.SceneLoaded)
    if not report.covered:
        log.add(Log.RadiusGap, msg=f"first failing radius {report.failing_radius!r}")
        log.add(Log.Witness, msg=f"{_point(report.witness)}")


def cmd_check_coverage(args: argparse.Namespace, log: Logger) -> int:
    scene = _load(args, log)
    report = check_coverage(
        scene.config,
        domains=scene.domains,
        strips=scene.strips,
        radial_steps=args.radial_steps,
        n_cores=args.cores,
    )
    _log_coverage(log, report)
    _emit(args, coverage_dict(report), _coverage_text(report))
    return EXIT_OK if report.covered else EXIT_NOT_COVERED


def _certify_angular(args: argparse.Namespace, log: Logger, scene: Scene):
    config = scene.config
    wedges = [w for s in scene.strips for w in strip_to_regular_domains(config, s)]
    if wedges:
        msg = f"{len(wedges)} wedge(s) from {len(scene.strips)} strip(s)"
        log.add(Log.Regularize, msg=msg)
    cert = certify_angular(
        config,
        [*scene.domains, *wedges],
        radial_steps=args.radial_steps,
        n_cores=args.cores,
    )
    log.add(Log.Regularize, msg=f"{len(cert.regularizations)} domain(s) regularized")
    for i in cert.ratio_violations:
        log.add(
            Log.RatioViolation,
            msg=f"domain {i}: ratio {cert.regularizations[i].angle_ratio!r}",
            level=logging.WARNING,
        )
    _log_coverage(log, cert.coverage)
    payload = angular_dict(cert)
    text = "\n".join(
        [
            f"Σα = {cert.sum_angles!r}, view angle 2ε = {cert.view_angle!r}, "
            f"slack {cert.slack:.3g}: {payload['verdict']}"
            + (" (equality)" if payload["equality"] and not cert.vacuous else ""),
            f"Σμ(Dᵢ ∩ T) = {cert.mu_sum!r} vs μ(T) = {cert.mu_disc!r} "
            f"(residual {cert.chain_residual:.3g})",
            _coverage_text(cert.coverage),
        ]
    )
    if cert.vacuous:
        return payload, text, EXIT_NOT_COVERED
    if not cert.inequality_holds:
        log.error(Log.InequalityViolation, msg=f"slack {cert.slack!r}")
        return payload, text, EXIT_VIOLATION
    if cert.chain_residual < -NEAR_SINGULAR_TOL:
        log.error(Log.IdentityViolation, msg=f"μ chain residual {cert.chain_residual!r}")
        return payload, text, EXIT_VIOLATION
    return payload, text, EXIT_OK


def _certify_plank(args: argparse.Namespace, log: Logger, scene: Scene):
    if scene.domains:
        logger.info(f"Ignoring {len(scene.domains)} angular domain(s) for the plank bound")
    cert = certify_plank(scene.strips, radial_steps=args.radial_steps, n_cores=args.cores)
    for area in cert.zone_areas:
        log.add(Log.ZoneArea, msg=f"{area!r}")
    _log_coverage(log, cert.coverage)
    payload = plank_dict(cert)
    equality = " (equality)" if payload["equality"] and not cert.vacuous else ""
    lines = [
        f"Σd = {cert.sum_widths!r} (clipped {cert.sum_clipped_widths!r}) vs 2: "
        f"{payload['verdict']}{equality}",
        _coverage_text(cert.coverage),
    ]
    exit_code = EXIT_OK
    if cert.vacuous:
        exit_code = EXIT_NOT_COVERED
    elif not cert.inequality_holds:
        log.error(Log.InequalityViolation, msg=f"slack {cert.slack!r}")
        exit_code = EXIT_VIOLATION
    if args.limit_radii:
        table = limit_derivation_check(
            [s.width for s in scene.strips], args.limit_radii, strips=scene.strips
        )
        payload["limit"] = limit_dict(table)
        columns = ["R", "2Σd/(2R-2)", "Σα", "2ε", "2/R", "(2R-2)/R", "holds"]
        rows = [
            [
                *(_cell(v) for v in (row.R, row.width_bound, row.wedge_angle_sum)),
                *(_cell(v) for v in (row.view_angle, row.sine_bound, row.implied_bound)),
                str(row.holds),
            ]
            for row in table.rows
        ]
        lines.append(format_pretty_table(rows, columns))
        if not table.holds and exit_code == EXIT_OK:
            log.error(Log.InequalityViolation, msg="limit chain broken")
            exit_code = EXIT_VIOLATION
    return payload, "\n".join(lines), exit_code


def cmd_certify(args: argparse.Namespace, log: Logger) -> int:
    """
    Certify the angular-domain theorem or the plank bound for the scene.
    """
    scene = _load(args, log)
    if args.theorem == "angular":
        payload, text, exit_code = _certify_angular(args, log, scene)
    else:
        payload, text, exit_code = _certify_plank(args, log, scene)
    verdict = f"{payload['theorem']}: {payload['verdict']}"
    log.add(Log.Certificate, msg=verdict, since=Log.SceneLoaded)
    if args.save is not None:
        write_atomic(args.save, json.dumps(payload, indent=2) + "\n")
    _emit(args, payload, text)
    return exit_code


def _read_witness(path: Path) -> Optional[PointXY]:
    try:
        certificate = json.loads(Path(path).read_text(encoding="utf-8"))
        witness = certificate["coverage"]["witness"]
        if witness is None:
            return None
        return PointXY(float(witness["x"]), float(witness["y"]))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise SceneValidationError(
            [("coverage.witness", f"unreadable certificate: {exc!r}")], source=str(path)
        ) from exc


def cmd_render(args: argparse.Namespace, log: Logger) -> int:
    scene = _load(args, log)
    witness = None if args.certificate is None else _read_witness(args.certificate)
    svg = render_scene(scene, resolution=args.resolution, witness=witness)
    write_atomic(args.out, svg)
    log.add(Log.Render, msg=f"Wrote {args.out}", since=Log.SceneLoaded)
    _emit(args, {"out": str(args.out), "witness": _point(witness)}, f"Wrote {args.out}")
    return EXIT_OK


def cmd_oracle_compare(args: argparse.Namespace, log: Logger) -> int:
    scene = _load(args, log)
    regular = [d for d in scene.domains if isinstance(d, RegularDomain)]
    rows = oracle_compare(scene.config, regular, grid=args.grid, seed=args.seed)
    for row in rows:
        log.add(Log.OracleRow, msg=f"{row.identity}: {row.max_residual:.3g}")
    payload = oracle_dict(rows)
    columns = ["identity", "max residual", "tolerance", "passed", "detail"]
    table = format_pretty_table(
        [
            [
                row.identity,
                f"{row.max_residual:.3g}",
                f"{row.tolerance:g}",
                str(row.passed),
                row.detail,
            ]
            for row in rows
        ],
        columns,
    )
    _emit(args, payload, table)
    if not payload["passed"]:
        log.error(Log.IdentityViolation, msg="oracle comparison failed")
        return EXIT_VIOLATION
    return EXIT_OK
