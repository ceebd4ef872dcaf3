"""Command-line front end.

Exit codes: 0 success / verified, 1 verification failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import verify as V
from .core import Family, ValidationError, classify, format_window, inverse, negative_count, parse
from .dtypes import (KINDS, CountMode, all_paths, count_d_types, count_paths, d_type_table,
                     diagonal_touch_points, trace_path)
from .genfun import check_identity
from .grid import render
from .statistics import (MAX_ENUM_ENV, Order, ResourceLimitError, des, descent_set,
                         descent_vector, idescent_set, ides, max_enumeration, two_sided_triangle)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class Config:
    max_enumeration: int
    rng_seed: int = 0
    output_format: str = "json"
    parallelism: int = 1


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _sign(text):
    if text in ("+", "plus", "1", "+1"):
        return 1
    if text in ("-", "minus", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _point(text):
    try:
        r, c = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected ROW,COL, got {text!r}") from None
    return (r, c)


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-enum", type=int, default=None,
                        help=f"cap on enumerated elements (env {MAX_ENUM_ENV})")
    common.add_argument("--seed", type=int, default=0, help="RNG seed for sampled checks")
    common.add_argument("--workers", type=_nonneg, default=1,
                        help="worker processes, 0 = one per CPU")

    order_opt = argparse.ArgumentParser(add_help=False)
    order_opt.add_argument("--order", type=Order.parse, default=Order.NATURAL,
                           help="natural or r")

    parser = argparse.ArgumentParser(
        prog="signedperm", description="Descent statistics on signed permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common, order_opt], help="statistics of one permutation")
    p.add_argument("--perm", required=True, help='window, e.g. "3,-2,-5,1,-4"')
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("triangle", parents=[common, order_opt], help="joint (des, ides) table")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.add_argument("--figure", help="also write a heat map to this file")

    p = sub.add_parser("involutions", parents=[common, order_opt], help="des vector of involutions")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--family", choices=["inv", "fpf"], default="inv")
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.add_argument("--figure", help="also write a bar chart to this file")

    p = sub.add_parser("trace", parents=[common, order_opt], help="grid and paths of one family")
    p.add_argument("--perm", required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--sign", type=_sign, default=1)
    p.add_argument("--start", type=_point, help="trace only the path from ROW,COL")

    p = sub.add_parser("dtypes", parents=[common, order_opt], help="d-type of every grid point")
    p.add_argument("--perm", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--counts", action="store_true", help="print type counts instead")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=["rec-b", "rec-i", "rec-j", "pde", "dtypes", "paths",
                                     "bijection", "equidist", "all"])
    p.add_argument("--max-n", type=_nonneg, default=None)
    p.add_argument("--samples", type=_nonneg, default=1000,
                   help="random permutations per n above 4 (dtypes)")
    p.add_argument("--timing", action="store_true", help="add wall time to the report")

    p = sub.add_parser("genfun", parents=[common], help="check a generating function identity")
    p.add_argument("--family", choices=["iub", "jub"], required=True)
    p.add_argument("--max-x", type=_nonneg, default=6)
    p.add_argument("--max-t", type=_nonneg, default=6)
    return parser


_DEFAULT_MAX_N = {"rec-b": 6, "rec-i": 9, "rec-j": 10, "pde": 6, "dtypes": 8, "paths": 5,
                  "bijection": 5, "equidist": 6, "all": 5}


def _cmd_stats(args, cfg, out):
    pi = parse(args.perm)
    c = classify(pi)
    o = args.order
    data = {
        "window": list(pi.window), "n": pi.n, "order": o.value,
        "des": des(pi, o), "ides": ides(pi, o), "negatives": negative_count(pi),
        "descent_set": sorted(descent_set(pi, o)), "idescent_set": sorted(idescent_set(pi, o)),
        "inverse": list(inverse(pi).window),
        "involution": c.is_involution, "fpf_involution": c.is_fpf_involution,
    }
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        for k in sorted(data):
            out.write(f"{k}: {data[k]}\n")
    return EXIT_OK


def _emit_table(obj, fmt, out):
    out.write({"csv": obj.to_csv, "json": lambda: obj.to_json() + "\n", "text": obj.to_text}[fmt]())


def _cmd_triangle(args, cfg, out):
    tri = two_sided_triangle(args.n, args.order, workers=cfg.parallelism)
    _emit_table(tri, args.format, out)
    if args.figure:
        from .plotting import plot_triangle
        plot_triangle(tri, args.figure)
    return EXIT_OK


def _cmd_involutions(args, cfg, out):
    fam = Family.INVOLUTIONS if args.family == "inv" else Family.FPF_INVOLUTIONS
    vec = descent_vector(args.n, fam, args.order)
    _emit_table(vec, args.format, out)
    if args.figure:
        from .plotting import plot_descent_vector
        plot_descent_vector(vec, args.figure)
    return EXIT_OK


def _cmd_trace(args, cfg, out):
    pi = parse(args.perm)
    sym = "+" if args.sign > 0 else "-"
    out.write(f"# grid of {format_window(pi.window)}\n")
    if pi.n:
        out.write(render(pi) + "\n")
    if args.start is not None:
        paths = [trace_path(pi, args.order, args.kind, args.sign, args.start)]
    else:
        paths = all_paths(pi, args.order, args.kind, args.sign)
    touches = {}
    if args.kind[1] == "h" and classify(pi).is_involution and args.start is None:
        touches = dict(diagonal_touch_points(pi, args.order, args.kind, args.sign))
    for k, path in enumerate(paths):
        extra = ""
        if k in touches:
            extra = f" touch {touches[k].row},{touches[k].col}"
        out.write(f"# path {k + 1} kind {args.kind} sign {sym} order {args.order.value}{extra}\n")
        for pt in path.points:
            out.write(f"{pt.row},{pt.col}\n")
    return EXIT_OK


def _cmd_dtypes(args, cfg, out):
    pi = parse(args.perm)
    if args.counts:
        brute = count_d_types(pi, args.order, CountMode.BRUTE_FORCE)
        closed = count_d_types(pi, args.order, CountMode.CLOSED_FORM)
        paths = count_paths(pi, args.order)
        data = {"perm": list(pi.window), "order": args.order.value,
                "brute_force": V._flat(brute), "closed_form": V._flat(closed),
                "paths": {f"{k}{'+' if s > 0 else '-'}": c for (k, s), c in sorted(paths.items())},
                "agree": brute == closed}
        out.write(_dump(data) + "\n")
        return EXIT_OK if brute == closed else EXIT_FAIL
    table = d_type_table(pi, args.order)
    n = pi.n
    rows = []
    for r in range(1, n + 2):
        for c in range(1, n + 2):
            rows.append((r, c) + table[(1, r, c)] + table[(-1, r, c)])
    if args.format == "json":
        out.write(json.dumps([{"row": r, "col": c, "plus": [a, b], "minus": [x, y]}
                              for r, c, a, b, x, y in rows]) + "\n")
    else:
        out.write("row,col,plus_p,plus_q,minus_p,minus_q\n")
        for row in rows:
            out.write(",".join(map(str, row)) + "\n")
    return EXIT_OK


def _cmd_verify(args, cfg, out):
    max_n = args.max_n if args.max_n is not None else _DEFAULT_MAX_N[args.suite]
    w = cfg.parallelism
    suite = args.suite
    if suite in ("rec-b", "rec-i", "rec-j", "pde"):
        report = V.verify_recurrence(suite, max_n, w)
    elif suite == "dtypes":
        report = V.verify_dtypes(max_n, args.samples, cfg.rng_seed, workers=w)
    elif suite == "paths":
        report = V.verify_paths(max_n, w)
    elif suite == "bijection":
        report = V.verify_bijection(max_n, w, args.timing)
    elif suite == "equidist":
        report = V.verify_equidist(max_n, max_n + 2)
    else:
        report = V.verify_all(max_n, min(args.samples, 200), cfg.rng_seed, w, args.timing)
    out.write(_dump(report) + "\n")
    return EXIT_OK if report["ok"] else EXIT_FAIL


def _cmd_genfun(args, cfg, out):
    report = check_identity(args.family, args.max_x, args.max_t)
    out.write(_dump(report) + "\n")
    return EXIT_OK if report["equal"] else EXIT_FAIL


_COMMANDS = {"stats": _cmd_stats, "triangle": _cmd_triangle, "involutions": _cmd_involutions,
             "trace": _cmd_trace, "dtypes": _cmd_dtypes, "verify": _cmd_verify,
             "genfun": _cmd_genfun}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.max_enum is not None:
        # the env var is also what worker processes read
        os.environ[MAX_ENUM_ENV] = str(args.max_enum)
    try:
        cfg = Config(max_enumeration=max_enumeration(), rng_seed=args.seed,
                     output_format=getattr(args, "format", "json"), parallelism=args.workers)
        return _COMMANDS[args.command](args, cfg, out)
    except (ValidationError, ResourceLimitError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
