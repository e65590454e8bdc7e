"""Command-line interface: compute, symmetrize, complete, diagram, verify,
family.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 degenerate
geometry, 4 bad parameter, 5 internal error.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__
from .completion import complete_via_diametric_simplex, supercompletion
from .diagrams import (
    TRIANGLE,
    UNION_BOUND,
    boundary_curves,
    diagram_point,
    sample_bodies,
    sample_diagram,
    verify_inequalities,
    write_csv,
    write_svg,
)
from .diameters import diameter, width
from .errors import (
    BodyDegenerate,
    Degenerate,
    DegenerateSample,
    EmptyInput,
    GaugeDegenerate,
    GeometryError,
    OriginNotInterior,
    ParamOutOfRange,
    PointBody,
)
from .families import FamilySpec, build
from .geometry import polygon_from_json, polygon_to_json
from .radii import circumradius, inradius, make_context
from .symmetry import Mode, symmetrize

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_PARAM = 4
EXIT_INTERNAL = 5

_MODES = {"min": Mode.MIN, "hm": Mode.HM, "am": Mode.AM, "max": Mode.MAX}


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _num(v):
    """Round to 10 significant digits for locale-independent stable output."""
    return float("%.10g" % float(v))


def _pair(p):
    return [[_num(p[0][0]), _num(p[0][1])], [_num(p[1][0]), _num(p[1][1])]]


def _load_polygon(path):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise _CliError(EXIT_PARSE, "cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise _CliError(EXIT_PARSE, "invalid JSON in %s: %s" % (path, exc))
    try:
        P, _ = polygon_from_json(obj)
    except (EmptyInput, ValueError) as exc:
        raise _CliError(EXIT_PARSE, "invalid polygon in %s: %s" % (path, exc))
    return P


def _write_json(obj, path=None):
    text = json.dumps(obj, indent=2) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _modes_arg(m):
    if m == "all":
        return list(Mode)
    return [_MODES[m]]


def _make_ctx(path, no_center):
    C = _load_polygon(path)
    return make_context(C, center=not no_center)


def _cmd_compute(args):
    K = _load_polygon(args.body)
    ctx = _make_ctx(args.gauge, args.no_center)
    R = circumradius(K, ctx.C).rho
    r = inradius(K, ctx.C).rho if K.is_fulldim else 0.0
    out = {
        "s": _num(ctx.s),
        "r": _num(r),
        "R": _num(R),
    }
    pairs = {}
    for m in _modes_arg(args.mode):
        d = diameter(K, ctx, m)
        w = width(K, ctx, m)
        name = m.name.lower()
        out["D_%s" % name] = _num(d.value)
        out["w_%s" % name] = _num(w.value)
        pairs[name] = _pair(d.pair)
    if R > 0:
        out["x"] = _num(r / R)
        for m in _modes_arg(args.mode):
            out["y_%s" % m.name.lower()] = _num(out["D_%s" % m.name.lower()]
                                                / (2.0 * R))
        if args.mode != "all":
            out["y"] = out["y_%s" % args.mode]
    out["diametral_pair"] = pairs if args.mode == "all" else pairs[args.mode]
    out["centered_gauge"] = polygon_to_json(ctx.C)
    out["applied_translation"] = [_num(-ctx.center[0]), _num(-ctx.center[1])]
    _write_json(out)
    return EXIT_OK


def _cmd_symmetrize(args):
    ctx = _make_ctx(args.gauge, args.no_center)
    _write_json(polygon_to_json(ctx.sym[_MODES[args.mode]]), args.output)
    return EXIT_OK


def _cmd_complete(args):
    K = _load_polygon(args.body)
    ctx = _make_ctx(args.gauge, args.no_center)
    mode = _MODES[args.mode]
    result = None
    if len(K.v) <= 512:
        result = complete_via_diametric_simplex(K, ctx, mode)
    if result is None:
        sys.stderr.write("no diametric triangle found; "
                         "emitting the supercompletion\n")
        result = supercompletion(K, ctx, mode)
    _write_json(polygon_to_json(result), args.output)
    return EXIT_OK


def _cmd_family(args):
    spec = FamilySpec(name=args.name, param=args.param,
                      resolution=args.resolution)
    obj = build(spec)
    if isinstance(obj, tuple):
        out = {"body": polygon_to_json(obj[0]), "gauge": polygon_to_json(obj[1])}
    else:
        out = polygon_to_json(obj)
    _write_json(out, args.output)
    return EXIT_OK


def _cmd_diagram(args):
    ctx = _make_ctx(args.gauge, args.no_center)
    mode = _MODES[args.mode]
    records = sample_diagram(ctx, mode, args.samples, args.seed)
    write_csv(records, args.output)
    if args.svg:
        gauge_class = TRIANGLE if ctx.is_triangle else UNION_BOUND
        write_svg(records, args.svg, curves=boundary_curves(mode, gauge_class))
    return EXIT_OK


def _cmd_verify(args):
    ctx = _make_ctx(args.gauge, args.no_center)
    modes = _modes_arg(args.mode)
    checked = 0
    for m in modes:
        for body_id, family, K in sample_bodies(ctx, m, args.samples,
                                                args.seed):
            report = verify_inequalities(K, ctx, m)
            checked += 1
            if not report.all_satisfied:
                worst = report.worst()
                out = {
                    "violation": {
                        "mode": m.name.lower(),
                        "body_id": body_id,
                        "family": family,
                        "inequality": worst.name,
                        "margin": _num(worst.margin),
                    },
                    "counterexample": polygon_to_json(K),
                }
                _write_json(out)
                return EXIT_VERIFY
    _write_json({"checked": checked, "violations": 0})
    return EXIT_OK


def _build_parser():
    p = argparse.ArgumentParser(prog="gaugediam",
                                description="planar gauge-diameter toolkit")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add_gauge(sp, mode_choices):
        sp.add_argument("--gauge", required=True, help="gauge polygon JSON")
        sp.add_argument("--mode", required=True, choices=mode_choices)
        sp.add_argument("--no-center", action="store_true",
                        help="use the gauge as given instead of centering it")

    sp = sub.add_parser("compute", help="functionals of a body in a gauge")
    sp.add_argument("--body", required=True, help="body polygon JSON")
    add_gauge(sp, ["min", "hm", "am", "max", "all"])
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("symmetrize", help="emit a symmetrization of a gauge")
    add_gauge(sp, ["min", "hm", "am", "max"])
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_symmetrize)

    sp = sub.add_parser("complete", help="complete a body to constant breadth")
    sp.add_argument("--body", required=True)
    add_gauge(sp, ["min", "hm", "am", "max"])
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_complete)

    sp = sub.add_parser("family", help="emit a named example body")
    sp.add_argument("--name", required=True)
    sp.add_argument("--param", type=float, default=0.0)
    sp.add_argument("--resolution", type=int, default=0)
    sp.add_argument("-o", "--output", default=None)
    sp.set_defaults(func=_cmd_family)

    sp = sub.add_parser("diagram", help="sample an (r/R, D/2R) diagram to CSV")
    add_gauge(sp, ["min", "hm", "am", "max"])
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("-o", "--output", required=True, help="CSV output path")
    sp.add_argument("--svg", default=None, help="optional SVG scatter path")
    sp.set_defaults(func=_cmd_diagram)

    sp = sub.add_parser("verify", help="check diagram inequalities on samples")
    add_gauge(sp, ["min", "hm", "am", "max", "all"])
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_verify)

    return p


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return exc.code
    except ParamOutOfRange as exc:
        sys.stderr.write("parameter error: %s\n" % exc)
        return EXIT_PARAM
    except (GaugeDegenerate, BodyDegenerate, Degenerate, DegenerateSample,
            OriginNotInterior, PointBody) as exc:
        sys.stderr.write("degenerate input: %s\n" % exc)
        return EXIT_DEGENERATE
    except EmptyInput as exc:
        sys.stderr.write("parse error: %s\n" % exc)
        return EXIT_PARSE
    except (GeometryError, ValueError, np.linalg.LinAlgError) as exc:
        sys.stderr.write("internal error: %s\n" % exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
