"""Command-line interface: JSON on stdout, human messages on stderr.

Exit codes: 0 success, 2 input error, 3 I/O error.

Points are separated with ``--``::

    chebyplanes tau 0 0 0 -- 2 2 -2
    chebyplanes section 2 2 3 --radius 1 --svg hexagon.svg
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional

from .isometry import canonical_class, isometric, orbit
from .metric_core import Point, Polyline, chebyshev_distance, polyline_length, scalar_to_json, to_scalar
from .oracle import ProbeConfig, probe_unique_geodesic
from .planes import (
    Plane,
    cross_section,
    nu_in_plane,
    section_edge_lengths,
    tau_in_plane,
    tau_in_plane_is_derived,
    translate_to_origin,
    triangle_test,
)
from .sectors import check_geodesic, nu_ambient, tau, tau_is_derived, witness_two_geodesics
from .svg import section_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3

DERIVED_TAU_NOTE = "tau/nu rule for n >= 4 is a derived extension of the n = 2, 3 results"
DERIVED_PLANE_NOTE = "in-plane tau on flat planes is derived by transport through the flat chart"

_NEGATIVE = re.compile(r"^-\d+(/\d+)?$")
_OPTION = re.compile(r"^--[a-z]")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1/2" through as a positional value
        self._negative_number_matcher = _NEGATIVE

    def error(self, message):
        raise CliError(f"{self.prog}: {message}", EXIT_INPUT)


def _scalar(text: str):
    try:
        return to_scalar(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _plane(values) -> Plane:
    try:
        return Plane(*values)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _split_points(coords, tail):
    if tail is not None:
        try:
            p, q = coords, [to_scalar(t) for t in tail]
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise CliError(f"bad coordinate after --: {exc}") from exc
    else:
        if len(coords) % 2:
            raise CliError("give two points separated by --")
        half = len(coords) // 2
        p, q = coords[:half], coords[half:]
    try:
        return Point(p), Point(q)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_classify(args) -> dict:
    if len(args.coeffs) not in (3, 4):
        raise CliError("classify takes A B C [D]")
    plane = _plane(args.coeffs)
    base, _ = translate_to_origin(plane)
    section = cross_section(base, 1)
    return {
        "plane": plane.to_json(),
        "triangle_test": triangle_test(plane),
        "canonical_class": canonical_class(plane).to_json(),
        "nu": nu_in_plane(plane),
        "shape": section.shape.value,
    }


def cmd_section(args) -> dict:
    plane = _plane(list(args.coeffs) + [0])
    if args.radius <= 0:
        raise CliError("radius must be positive")
    poly = cross_section(plane, args.radius)
    out = poly.to_json()
    out["edge_lengths"] = [scalar_to_json(v) for v in section_edge_lengths(poly)]
    if args.svg:
        try:
            Path(args.svg).write_text(section_svg(poly))
        except OSError as exc:
            raise CliError(f"cannot write {args.svg}: {exc}", EXIT_IO) from exc
        out["svg"] = str(args.svg)
    return out


def cmd_orbit(args) -> dict:
    return orbit(_plane(list(args.coeffs) + [0])).to_json()


def cmd_isometric(args) -> dict:
    if len(args.coeffs) != 8:
        raise CliError("isometric takes A B C D A' B' C' D'")
    p1, p2 = _plane(args.coeffs[:4]), _plane(args.coeffs[4:])
    return {
        "isometric": isometric(p1, p2),
        "class1": canonical_class(p1).to_json(),
        "class2": canonical_class(p2).to_json(),
    }


def cmd_tau(args, tail, notes) -> dict:
    p, q = _split_points(args.coords, tail)
    if p.dim != q.dim:
        raise CliError("points have different dimensions")
    out = {"p": p.to_json(), "q": q.to_json()}
    if args.plane:
        plane = _plane(args.plane)
        try:
            out["tau"] = tau_in_plane(plane, p, q).to_json()
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        out["plane"] = plane.to_json()
        if tau_in_plane_is_derived(plane):
            notes.append(DERIVED_PLANE_NOTE)
    else:
        out["tau"] = tau(p, q).to_json()
        if tau_is_derived(p.dim):
            notes.append(DERIVED_TAU_NOTE)
    if args.probe:
        if p == q:
            raise CliError("probing needs distinct points")
        out["probe_unique"] = probe_unique_geodesic(p, q, ProbeConfig(seed=args.seed))
    return out


def cmd_nu(args, notes) -> dict:
    if args.ambient is not None:
        if args.ambient < 2:
            raise CliError("dimension must be at least 2")
        if tau_is_derived(args.ambient):
            notes.append(DERIVED_TAU_NOTE)
        return {"nu": nu_ambient(args.ambient), "dimension": args.ambient}
    plane = _plane(args.plane)
    return {"nu": nu_in_plane(plane), "plane": plane.to_json()}


def cmd_witness(args, tail, notes) -> dict:
    p, q = _split_points(args.coords, tail)
    try:
        first, second = witness_two_geodesics(p, q)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if tau_is_derived(p.dim):
        notes.append(DERIVED_TAU_NOTE)
    return {
        "geodesics": [first.to_json(), second.to_json()],
        "length": scalar_to_json(chebyshev_distance(p, q)),
    }


def cmd_geodesic_check(args) -> dict:
    try:
        text = sys.stdin.read() if args.path_file == "-" else Path(args.path_file).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {args.path_file}: {exc}", EXIT_IO) from exc
    try:
        path = Polyline.from_json(json.loads(text))
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse polyline: {exc}") from exc
    verdict = check_geodesic(path)
    out = {
        "is_geodesic": verdict.is_geodesic,
        "length": scalar_to_json(polyline_length(path)),
        "endpoint_distance": scalar_to_json(verdict.endpoint_distance),
    }
    if verdict.sector is not None:
        out["sector"] = verdict.sector.to_json()
    if verdict.violation is not None:
        out["violation"] = [v.to_json() for v in verdict.violation]
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json-indent", type=int, default=None, metavar="N")

    parser = _Parser(prog="chebyplanes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="isometry class of a plane")
    p.add_argument("coeffs", nargs="+", type=_scalar, metavar="A B C D")

    p = sub.add_parser("section", parents=[common], help="unit-disc boundary of a plane")
    p.add_argument("coeffs", nargs=3, type=_scalar, metavar="A")
    p.add_argument("--radius", type=_scalar, default=to_scalar(1))
    p.add_argument("--svg", default=None, metavar="PATH")

    p = sub.add_parser("orbit", parents=[common], help="orbit under the cube group")
    p.add_argument("coeffs", nargs=3, type=_scalar, metavar="A")

    p = sub.add_parser("isometric", parents=[common], help="decide whether two planes are isometric")
    p.add_argument("coeffs", nargs="+", type=_scalar, metavar="A")

    p = sub.add_parser("tau", parents=[common], help="geodesic count between two points")
    p.add_argument("coords", nargs="+", type=_scalar, metavar="X")
    p.add_argument("--plane", nargs=4, type=_scalar, metavar="A")
    p.add_argument("--probe", action="store_true", help="cross-check with the midpoint probe")
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("nu", parents=[common], help="count of unique-geodesic sphere points")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ambient", type=int, metavar="N")
    group.add_argument("--plane", nargs=4, type=_scalar, metavar="A")

    p = sub.add_parser("witness", parents=[common], help="two distinct geodesics")
    p.add_argument("coords", nargs="+", type=_scalar, metavar="X")

    p = sub.add_parser("geodesic-check", parents=[common], help="test a polyline JSON file")
    p.add_argument("path_file", metavar="FILE")
    return parser


def run(argv: List[str]) -> tuple:
    """Execute one command; returns ``(exit_code, result_document, indent)``."""
    tail = None
    if "--" in argv:
        k = argv.index("--")
        argv, tail = argv[:k], argv[k + 1:]
        # options may follow the second point
        opt = next((i for i, t in enumerate(tail) if _OPTION.match(t)), len(tail))
        argv, tail = argv + tail[opt:], tail[:opt]
    notes: List[str] = []
    command = argv[0] if argv else ""
    indent = None
    try:
        args = build_parser().parse_args(argv)
        indent = args.json_indent
        command = args.command
        if tail is not None and command not in ("tau", "witness"):
            raise CliError(f"{command} does not take a second point")
        if command == "classify":
            payload = cmd_classify(args)
        elif command == "section":
            payload = cmd_section(args)
        elif command == "orbit":
            payload = cmd_orbit(args)
        elif command == "isometric":
            payload = cmd_isometric(args)
        elif command == "tau":
            payload = cmd_tau(args, tail, notes)
        elif command == "nu":
            payload = cmd_nu(args, notes)
        elif command == "witness":
            payload = cmd_witness(args, tail, notes)
        else:
            payload = cmd_geodesic_check(args)
    except CliError as exc:
        return exc.code, {"status": "error", "command": command, "error": str(exc)}, indent
    result = {"status": "ok", "command": command, "payload": payload}
    if notes:
        result["notes"] = notes
    return EXIT_OK, result, indent


def main(argv: Optional[List[str]] = None) -> int:
    code, result, indent = run(list(sys.argv[1:] if argv is None else argv))
    if code != EXIT_OK:
        print(result["error"], file=sys.stderr)
    print(json.dumps(result, indent=indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
