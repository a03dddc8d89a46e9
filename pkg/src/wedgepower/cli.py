"""Command-line entry point.

Every subcommand reads and writes the shared JSON schemas and uses stable
exit codes: 0 when the computation succeeds and any checked claim holds,
2 when a claim is refuted (non-convexity found, no equivalence, not
p-good, a violated grid run), and 1 for usage, input or budget errors.
"""

import argparse
import sys
from typing import Optional, Sequence

from . import cornercut as cornercut_mod
from . import counterexample3d as cx3d
from .geometry import BudgetError, DimensionError, PointConfig, are_equivalent
from .harness import GridSpec, is_p_good, verify_grid, verify_polygon
from .jsonio import InputFormatError, config_to_json, dumps, read_point_config
from .render import render_svg
from .wedge import check_lattice_convex, wedge_in_range, wedge_power


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as handle:
            handle.write(text)


def _single_input(args: argparse.Namespace) -> PointConfig:
    if not args.input or len(args.input) != 1:
        raise UsageError("exactly one --input file is required")
    return read_point_config(args.input[0])


def _parse_grid(text: str) -> GridSpec:
    try:
        w, h = text.lower().split("x")
        return GridSpec(int(w), int(h))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"--grid expects WxH with integers, got {text!r}") from exc


def _cmd_wedge(args: argparse.Namespace) -> int:
    config = _single_input(args)
    in_range = wedge_in_range(config, args.p)
    if not in_range:
        print(
            f"note: no subsets of size {args.p} in a {len(config)}-point set; emitting the empty set",
            file=sys.stderr,
        )
    result = wedge_power(config, args.p, method=args.method)
    payload = config_to_json(result)
    payload["in_range"] = in_range  # extra key, ignored when read back as a configuration
    _write(dumps(payload), args.output)
    return 0


def _cmd_check_convex(args: argparse.Namespace) -> int:
    config = _single_input(args)
    report = check_lattice_convex(config)
    _write(dumps(report.to_json()), args.output)
    return 0 if report.convex else 2


def _cmd_verify_polygon(args: argparse.Namespace) -> int:
    config = _single_input(args)
    report = verify_polygon(config)
    _write(dumps(report.to_json()), args.output)
    return 0 if report.verdict == "conforms" else 2


def _cmd_verify_grid(args: argparse.Namespace) -> int:
    summary = verify_grid(_parse_grid(args.grid), jobs=args.jobs)
    _write(dumps(summary.to_json()), args.output)
    return 0 if not summary.violations else 2


def _cmd_p_good(args: argparse.Namespace) -> int:
    config = _single_input(args)
    witness = is_p_good(config, args.p)
    payload = {
        "p": args.p,
        "p_good": witness is not None,
        "witness": list(witness) if witness is not None else None,
    }
    _write(dumps(payload), args.output)
    return 0 if witness is not None else 2


def _cmd_cornercut(args: argparse.Namespace) -> int:
    report = cornercut_mod.verify_corner_cut(args.d, args.B)
    payload = {
        "d": args.d,
        "B": args.B,
        "wedge_size": report.cardinality,
        "convex": report.convex,
        "missing": [list(p) for p in report.missing],
    }
    _write(dumps(payload), args.output)
    return 0 if report.convex else 2


def _cmd_counterexample3d(args: argparse.Namespace) -> int:
    report = cx3d.verify_counterexample()
    _write(dumps(report.to_json()), args.output)
    return 0 if report.holds else 2


def _cmd_equivalent(args: argparse.Namespace) -> int:
    if not args.input or len(args.input) != 2:
        raise UsageError("equivalent needs exactly two --input files")
    first = read_point_config(args.input[0])
    second = read_point_config(args.input[1])
    witness = are_equivalent(first, second)
    payload = {
        "equivalent": witness is not None,
        "map": None
        if witness is None
        else {
            "matrix": [list(row) for row in witness.matrix],
            "translation": list(witness.translation),
        },
    }
    _write(dumps(payload), args.output)
    return 0 if witness is not None else 2


def _cmd_render(args: argparse.Namespace) -> int:
    config = _single_input(args)
    _write(render_svg(config, show_hull=args.hull), args.output)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="wedgepower", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--input", action="append", metavar="PATH", help="point configuration JSON")
        p.add_argument("--output", metavar="PATH", help="write result here instead of stdout")
        return p

    p = add("wedge", _cmd_wedge, help="sums of all fixed-size subsets")
    p.add_argument("-p", type=int, required=True, help="subset size")
    p.add_argument("--method", choices=("dp", "naive"), default="dp")

    add("check-convex", _cmd_check_convex, help="is the set the lattice points of its hull")

    add("verify-polygon", _cmd_verify_polygon, help="convexity of every wedge power of one configuration")

    p = add("verify-grid", _cmd_verify_grid, help="exhaustive check over a small grid")
    p.add_argument("--grid", required=True, metavar="WxH")
    p.add_argument("--jobs", type=int, default=1)

    p = add("p-good", _cmd_p_good, help="common wedge point of all one-vertex deletions")
    p.add_argument("-p", type=int, required=True, help="subset size")

    p = add("cornercut", _cmd_cornercut, help="corner-cut convexity at one truncation")
    p.add_argument("-d", type=int, required=True, help="subset size")
    p.add_argument("-B", type=int, required=True, help="truncation bound")

    add("counterexample3d", _cmd_counterexample3d, help="the three-dimensional witness run")

    add("equivalent", _cmd_equivalent, help="search for a unimodular map between two configurations")

    p = add("render", _cmd_render, help="SVG dot diagram of a planar configuration")
    p.add_argument("--hull", action="store_true", help="draw the convex hull outline")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (InputFormatError, BudgetError, DimensionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
