"""Command-line front end.

Exit codes: 0 on success (and on all checks passing), 1 when validation or a
check suite fails or a computation rejects its input, 2 on usage, parse, or
file-format errors.  Exact rationals print as integers or p/q; interval
values print as [lo,hi].  JSON output is schema-versioned and byte-stable
for identical inputs.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import config
from .change_of_rings import base_change, cobase_change_model, load_phi
from .duality import build_dagger, check_fixed_points, check_isometry
from .errors import (ModelFormatError, NoDualizing, NotClosedUnderDuality,
                     ParseError, SdcmError)
from .examples import iterated_model, square_zero_model
from .metric import (check_bounds, check_direct_edge, check_hom_order_consistency,
                     check_metric_axioms, check_trichotomy, distance_table,
                     emit_dot)
from .model import load_model, model_to_dict, save_model, validate
from .parse import parse_series
from .report import CheckReport
from .series import curvature, format_curvature

SCHEMA = 1

_SUITES = ("metric", "edge", "bounds", "trichotomy", "fixed", "duality", "all")


def _print_json(doc, out):
    json.dump(doc, out, sort_keys=True, indent=2)
    out.write("\n")


def _run_suites(model, suites):
    table = distance_table(model)
    reports = []
    if "metric" in suites:
        reports.append(check_metric_axioms(model, table))
    if "edge" in suites:
        reports.append(check_direct_edge(model, table))
    if "bounds" in suites:
        reports.append(check_bounds(model, table))
    if "trichotomy" in suites:
        reports.append(check_trichotomy(model, table))
    if "fixed" in suites:
        reports.append(check_hom_order_consistency(model))
    if "duality" in suites:
        try:
            dagger = build_dagger(model)
        except NoDualizing as exc:
            reports.append(CheckReport("duality", True, [f"skipped: {exc}"]))
        except NotClosedUnderDuality as exc:
            reports.append(CheckReport("duality", False, [str(exc)]))
        else:
            reports.append(check_isometry(model, dagger, table))
            reports.append(check_fixed_points(model, dagger))
    return reports


def _emit_model(model, out_path, out):
    if out_path:
        save_model(model, out_path)
    else:
        _print_json(model_to_dict(model), out)


def _cmd_validate(args, out):
    rep = validate(load_model(args.model))
    if args.format == "json":
        _print_json({"schema": SCHEMA, **rep.to_json_dict()}, out)
    else:
        out.write(str(rep) + "\n")
    return 0 if rep.valid else 1


def _cmd_curv(args, out):
    c = curvature(parse_series(args.expr))
    if args.format == "json":
        _print_json({"schema": SCHEMA, "curvature": format_curvature(c)}, out)
    else:
        out.write(format_curvature(c) + "\n")
    return 0


def _cmd_dist(args, out):
    model = load_model(args.model)
    for cid in (args.k, args.l):
        if cid not in model.classes:
            raise ModelFormatError(f"unknown class id {cid!r} in {model.name}")
    table = distance_table(model)
    d = format_curvature(table[(args.k, args.l)])
    if args.format == "json":
        _print_json({"schema": SCHEMA, "model": model.name,
                     "from": args.k, "to": args.l, "distance": d}, out)
    else:
        out.write(d + "\n")
    return 0


def _cmd_table(args, out):
    model = load_model(args.model)
    ids = model.class_ids()
    table = distance_table(model)
    cells = [[format_curvature(table[(a, b)]) for b in ids] for a in ids]
    if args.format == "json":
        _print_json({"schema": SCHEMA, "model": model.name, "ids": ids,
                     "distances": cells}, out)
    else:
        width = max(len(s) for row in cells for s in row)
        width = max(width, max(len(i) for i in ids))
        header = " ".join([" " * width] + [i.rjust(width) for i in ids])
        out.write(header + "\n")
        for a, row in zip(ids, cells):
            out.write(" ".join([a.rjust(width)] + [s.rjust(width) for s in row]) + "\n")
    return 0


def _cmd_dot(args, out):
    out.write(emit_dot(load_model(args.model)))
    return 0


def _cmd_check(args, out):
    model = load_model(args.model)
    suites = _SUITES[:-1] if args.suite == "all" else (args.suite,)
    reports = _run_suites(model, suites)
    if args.format == "json":
        _print_json({"schema": SCHEMA, "model": model.name,
                     "checks": [r.to_json_dict() for r in reports]}, out)
    else:
        for r in reports:
            out.write(str(r) + "\n")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_basechange(args, out):
    _emit_model(base_change(load_model(args.model), load_phi(args.phi)),
                args.output, out)
    return 0


def _cmd_cobase(args, out):
    _emit_model(cobase_change_model(load_model(args.model), load_phi(args.phi)),
                args.output, out)
    return 0


def _cmd_example(args, out):
    if args.kind == "square0":
        model = square_zero_model(args.r)
    else:
        if args.s is None:
            raise ModelFormatError("iterated example needs --s")
        model = iterated_model(args.r, args.s)
    _emit_model(model, args.output, out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sdcm",
        description="Distances, duality, and change of rings on finite "
                    "posets of semidualizing-complex classes.")
    parser.add_argument("--n-check", type=int, default=None,
                        help="length of the nonnegative-coefficient scan")
    parser.add_argument("--eps", type=str, default=None,
                        help="target width for interval curvatures (rational, e.g. 1/1000000)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("validate", help="check model invariants")
    p.add_argument("model")
    common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("curv", help="growth rate of a series expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=_cmd_curv)

    p = sub.add_parser("dist", help="distance between two classes")
    p.add_argument("model")
    p.add_argument("k")
    p.add_argument("l")
    common(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("table", help="full pairwise distance matrix")
    p.add_argument("model")
    common(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("dot", help="Graphviz text for the comparability graph")
    p.add_argument("model")
    p.set_defaults(func=_cmd_dot)

    p = sub.add_parser("check", help="run theorem check suites")
    p.add_argument("model")
    p.add_argument("--suite", choices=_SUITES, default="all")
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("basechange", help="transport a model along a map")
    p.add_argument("model")
    p.add_argument("phi")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_basechange)

    p = sub.add_parser("cobase", help="combined two-family model along a map")
    p.add_argument("model")
    p.add_argument("phi")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_cobase)

    p = sub.add_parser("example", help="emit a built-in example model")
    p.add_argument("kind", choices=("square0", "iterated"))
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_example)

    return parser


def _apply_overrides(args):
    n_check = os.environ.get("SDCM_NCHECK")
    if args.n_check is not None:
        config.N_CHECK = args.n_check
    elif n_check:
        config.N_CHECK = int(n_check)
    eps = os.environ.get("SDCM_EPS")
    if args.eps is not None:
        config.EPS_CURV = Fraction(args.eps)
    elif eps:
        config.EPS_CURV = Fraction(eps)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        _apply_overrides(args)
        return args.func(args, out)
    except (ParseError, ModelFormatError, OSError, json.JSONDecodeError) as exc:
        print(f"sdcm: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError,) as exc:
        print(f"sdcm: error: {exc}", file=sys.stderr)
        return 2
    except SdcmError as exc:
        print(f"sdcm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
