"""Command-line front end.

Exit status: 0 on success, 1 when an object fails validation or violates an
operation's preconditions, 2 on usage errors (bad arguments, unreadable
files, schema mismatches).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import bridge, gt, spectral, tableaux
from .common import PreconditionError
from .formats import SchemaError, dumps, load, matrix_to_csv, read_matrix
from .render import render

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_tol() -> float:
    raw = os.environ.get("FRAMESTEPS_TOL")
    if raw is None:
        return spectral.DEFAULT_TOL
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"FRAMESTEPS_TOL={raw!r} is not a number")


def _load_object(path: str):
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _load_matrix(path: str) -> np.ndarray:
    try:
        return read_matrix(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _report(report, out) -> int:
    if report.ok:
        print("ok", file=out)
        return EXIT_OK
    for v in report.violations:
        print(f"invalid: {v}", file=out)
    return EXIT_INVALID


def cmd_validate(args, out) -> int:
    obj = _load_object(args.file)
    if isinstance(obj, tableaux.Tableau):
        return _report(tableaux.validate_tableau(obj), out)
    if isinstance(obj, gt.GTPattern):
        return _report(gt.validate_gt(obj), out)
    spectral.as_frame(obj)
    print("ok", file=out)
    return EXIT_OK


def cmd_convert(args, out) -> int:
    obj = _load_object(args.file)
    target = args.to
    if isinstance(obj, tableaux.Tableau):
        if obj.is_straight:
            result = {
                "gt": lambda: bridge.ssyt_to_gt(obj, args.n),
                "skew": lambda: tableaux.strip_to_skew(obj),
                "parallelogram": lambda: bridge.skew_to_gt(tableaux.strip_to_skew(obj), args.n),
                "ssyt": lambda: obj,
            }[target]()
        else:
            result = {
                "gt": lambda: bridge.skew_to_gt(obj, args.n),
                "parallelogram": lambda: bridge.skew_to_gt(obj, args.n),
                "ssyt": lambda: tableaux.skew_to_straight(obj),
                "skew": lambda: obj,
            }[target]()
    elif isinstance(obj, gt.GTPattern):
        if obj.kind == "triangular":
            width = args.width if args.width is not None else len(tableaux.strip_zeros(obj.top))
            result = {
                "ssyt": lambda: bridge.gt_to_ssyt(obj),
                "skew": lambda: tableaux.strip_to_skew(bridge.gt_to_ssyt(obj)),
                "parallelogram": lambda: gt.triangular_to_parallelogram(obj, width),
                "gt": lambda: obj,
            }[target]()
        else:
            result = {
                "skew": lambda: bridge.gt_to_skew(obj),
                "ssyt": lambda: bridge.gt_to_ssyt(gt.parallelogram_to_triangular(obj)),
                "gt": lambda: gt.parallelogram_to_triangular(obj),
                "parallelogram": lambda: obj,
            }[target]()
    else:
        raise UsageError("convert works on tableau and gt objects")
    print(dumps(result), file=out)
    return EXIT_OK


def cmd_complement(args, out) -> int:
    obj = _load_object(args.file)
    m = args.map
    if m in ("gamma", "boxcomp"):
        if not isinstance(obj, tableaux.Tableau):
            raise UsageError(f"--map {m} needs a tableau")
        if m == "gamma":
            n = args.n if args.n is not None else (obj.shape[0] if obj.shape else 0)
            d = args.d if args.d is not None else len(obj.rows)
            result = tableaux.gamma_complement(obj, n, d)
        else:
            n = args.n if args.n is not None else obj.max_entry
            result = tableaux.boxcomp(obj, n, args.c)
    else:
        if not isinstance(obj, gt.GTPattern):
            raise UsageError(f"--map {m} needs a gt pattern")
        if m == "naimark":
            n = args.n if args.n is not None else obj.height
            d = args.d if args.d is not None else len(tableaux.strip_zeros(obj.top))
            result = gt.naimark_map(obj, n, d)
        else:
            result = gt.generalized_complement(obj)
    print(dumps(result), file=out)
    return EXIT_OK


def cmd_eigensteps(args, out) -> int:
    phi = _load_matrix(args.matrix)
    tol = args.tol if args.tol is not None else _default_tol()
    table = (spectral.outer_eigensteps if args.outer else spectral.inner_eigensteps)(phi, tol)
    if args.clear:
        cleared = spectral.clear(table, args.max_den, tol)
        print(f"ell={cleared.ell}", file=out)
        print(dumps(cleared.pattern), file=out)
    else:
        print(json.dumps({"kind": "eigensteps", "form": table.form,
                          "rows": [list(r) for r in table.rows]}), file=out)
    return EXIT_OK


def cmd_report(args, out) -> int:
    phi = _load_matrix(args.matrix)
    r = spectral.frame_report(phi, args.tol if args.tol is not None else _default_tol())
    d, n = phi.shape
    print(f"dimensions: {d} x {n}", file=out)
    print(f"rank: {r.rank}", file=out)
    print(f"lower bound: {r.lower!r}", file=out)
    print(f"upper bound: {r.upper!r}", file=out)
    print(f"tight: {str(r.tight).lower()}", file=out)
    print(f"equal norm: {str(r.equal_norm).lower()}", file=out)
    print("norms squared: " + ", ".join(f"{x:.12g}" for x in r.norms_squared), file=out)
    print("spectrum: " + ", ".join(f"{x:.12g}" for x in r.spectrum), file=out)
    return EXIT_OK


def cmd_naimark_frame(args, out) -> int:
    phi = _load_matrix(args.matrix)
    tol = args.tol if args.tol is not None else _default_tol()
    psi = spectral.naimark_frame(phi, "generalized" if args.generalized else "tight", tol)
    out.write(matrix_to_csv(psi))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    if sum(args.shape) != sum(args.weight):
        raise PreconditionError(
            f"shape has {sum(args.shape)} cells but weight sums to {sum(args.weight)}")
    stream = tableaux.enumerate_tableaux(args.shape, args.weight, args.limit)
    if args.count_only:
        print(sum(1 for _ in stream), file=out)
        return EXIT_OK
    count = 0
    for t in stream:
        print(dumps(t), file=out)
        count += 1
    print(f"count: {count}", file=sys.stderr)
    return EXIT_OK


def sweep_diagrams(n: int, d: int) -> dict[str, tuple[int, int]]:
    """Check both commutative diagrams over the full domain for ``(n, d)``.

    The Naimark diagram runs over all ``d x n`` tableaux of constant weight
    ``d``; the boxcomp diagram over every nonempty SSYT with labels in
    ``[n]`` fitting in a ``d x n`` box (``d < n`` keeps the last top-row entry 0).
    """
    rect = list(tableaux.enumerate_tableaux((n,) * d, (d,) * n))
    nai = sum(bridge.verify_naimark_diagram(t, n, d) for t in rect)
    box_total = box_ok = 0
    for size in range(1, n * d + 1):
        for shape in tableaux.partitions_of(size, n):
            if len(shape) > d:
                continue
            for t in tableaux.tableaux_of_shape(shape, n):
                box_total += 1
                box_ok += bridge.verify_boxcomp_diagram(t, n)
    return {"naimark": (nai, len(rect)), "boxcomp": (box_ok, box_total)}


def cmd_verify_diagrams(args, out) -> int:
    if not 0 < args.d < args.n:
        raise PreconditionError(f"need 0 < d < n, got n={args.n}, d={args.d}")
    results = sweep_diagrams(args.n, args.d)
    ok = True
    for name, (good, total) in results.items():
        print(f"{name}: {good}/{total} commute", file=out)
        ok &= good == total
    return EXIT_OK if ok else EXIT_INVALID


def cmd_render(args, out) -> int:
    obj = _load_object(args.file)
    if isinstance(obj, np.ndarray):
        raise UsageError("render works on tableau and gt objects")
    print(render(obj, args.format), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="framesteps", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a tableau, GT pattern or matrix file")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("convert", help="convert between tableaux and GT patterns")
    s.add_argument("--to", required=True, choices=["ssyt", "gt", "skew", "parallelogram"])
    s.add_argument("--n", type=int, help="number of pattern rows / label bound")
    s.add_argument("--width", type=int, help="parallelogram width (default: rank)")
    s.add_argument("file")
    s.set_defaults(func=cmd_convert)

    s = sub.add_parser("complement", help="apply a complement map")
    s.add_argument("--map", required=True, choices=["gamma", "boxcomp", "naimark", "generalized"])
    s.add_argument("--n", type=int)
    s.add_argument("--d", type=int)
    s.add_argument("--c", type=int, help="boxcomp column bound")
    s.add_argument("file")
    s.set_defaults(func=cmd_complement)

    s = sub.add_parser("eigensteps", help="eigensteps of a synthesis matrix")
    s.add_argument("--outer", action="store_true")
    s.add_argument("--clear", action="store_true")
    s.add_argument("--tol", type=float)
    s.add_argument("--max-den", type=int, default=spectral.DEFAULT_MAX_DEN)
    s.add_argument("matrix")
    s.set_defaults(func=cmd_eigensteps)

    s = sub.add_parser("report", help="frame bounds, rank and tightness")
    s.add_argument("--tol", type=float)
    s.add_argument("matrix")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("naimark-frame", help="print a Naimark complement as CSV")
    s.add_argument("--generalized", action="store_true")
    s.add_argument("--tol", type=float)
    s.add_argument("matrix")
    s.set_defaults(func=cmd_naimark_frame)

    s = sub.add_parser("enumerate", help="list SSYT of a shape and weight")
    s.add_argument("--shape", type=_ints, required=True)
    s.add_argument("--weight", type=_ints, required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify-diagrams", help="check both complement diagrams exhaustively")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_verify_diagrams)

    s = sub.add_parser("render", help="draw a tableau or GT pattern")
    s.add_argument("--format", choices=["ascii", "latex"], default="ascii")
    s.add_argument("file")
    s.set_defaults(func=cmd_render)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, SchemaError) as exc:
        print(f"framesteps: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, spectral.NotClearableError) as exc:
        print(f"framesteps: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except spectral.ConvergenceError as exc:
        print(f"framesteps: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
