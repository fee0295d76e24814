"""Command-line front end.

    fodkit eval    --expr "x" --method karci --alpha 2/3 --x 7
    fodkit grid    --expr "sin(x)" --alpha 1/2 --min 0.1 --max 10 --count 200
    fodkit figure  --id 8 --out figures/
    fodkit compare --expr "5" --alpha 2/3 --min 1 --max 3 --count 21
    fodkit oracle  --expr "x^2+3*x+4" --alpha 1/2 --x 2

Exit codes: 0 ok, 2 parse/usage error, 3 domain error or pole,
4 non-convergence.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import local
from .classical import ClassicalParams, QuadratureConfig, as_monomial, caputo_fod, euler_fod, rl_fod
from .csvio import CsvRecord, write_records
from .errors import ConvergenceError, DomainError, FodError, ParseError, PoleError
from .expr import derivative, parse
from .figures import FIGURES, write_figure, write_gnuplot_script
from .order import CValue, format_cvalue, parse_order

EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_CONVERGENCE = 4

METHODS = ("karci", "karci-oracle", "euler", "rl", "caputo")


def _oracle_kwargs(args):
    return {"h0": args.h0, "levels": args.levels, "tol": args.tol}


def evaluate_method(method, f, order, x, args, df=None) -> CValue:
    """One derivative value by the named method."""
    if method == "karci":
        return local.fod_value(f, order, x, df)
    if method == "karci-oracle":
        return local.fod_limit_oracle(f, order, x, **_oracle_kwargs(args))
    if method == "euler":
        m, c = args.m, args.c
        if m is None:
            mono = as_monomial(f)
            if mono is None:
                raise DomainError("euler needs a monomial c*x^m (or --m/--c)")
            c, m = mono
        return CValue(euler_fod(m, order, x, 1.0 if c is None else c))
    params = ClassicalParams(args.a, x, order)
    q = QuadratureConfig(panels=args.panels)
    if method == "rl":
        return CValue(rl_fod(f, params, q, scheme=args.scheme))
    if method == "caputo":
        return CValue(caputo_fod(f, params, q))
    raise ValueError(f"unknown method {method!r}")


def _classification(v: CValue) -> str:
    return "real" if v.is_real else "complex"


def cmd_eval(args, out):
    f = parse(args.expr)
    order = parse_order(args.alpha)
    v = evaluate_method(args.method, f, order, args.x, args)
    print(f"{format_cvalue(v)} ({_classification(v)})", file=out)


def _grid(args):
    return np.linspace(args.min, args.max, args.count)


def _series_records(method, f, order, xs, args, series=None):
    df = derivative(f)
    records = []
    for x in xs:
        try:
            v = evaluate_method(method, f, order, x, args, df)
        except PoleError:
            records.append(CsvRecord(float(x), series or method, math.nan, math.nan, "pole"))
        except ConvergenceError:
            records.append(CsvRecord(float(x), series or method, math.nan, math.nan, "no_convergence"))
        except DomainError:
            records.append(CsvRecord(float(x), series or method, math.nan, math.nan, "domain_error"))
        else:
            records.append(CsvRecord(float(x), series or method, v.re, v.im, _classification(v)))
    return records


def _emit(records, path, out):
    if path:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            write_records(fh, records, classification=True)
    else:
        write_records(out, records, classification=True)


def cmd_grid(args, out):
    f = parse(args.expr)
    order = parse_order(args.alpha)
    _emit(_series_records(args.method, f, order, _grid(args), args), args.out, out)


def cmd_compare(args, out):
    f = parse(args.expr)
    order = parse_order(args.alpha)
    xs = _grid(args)
    methods = ["karci", "karci-oracle"]
    if args.m is not None or as_monomial(f) is not None:
        methods.append("euler")
    if 0.0 < order.alpha <= 1.0:
        methods += ["rl", "caputo"]
    records = []
    for method in methods:
        records += _series_records(method, f, order, xs, args)
    _emit(records, args.out, out)


def cmd_figure(args, out):
    ids = sorted(FIGURES) if args.id == "all" else [int(args.id)]
    for figure_id in ids:
        if figure_id not in FIGURES:
            raise ValueError(f"figure id must be in 1..16, got {figure_id}")
    for figure_id in ids:
        path = write_figure(figure_id, args.out)
        print(path, file=out)
        if args.gnuplot:
            print(write_gnuplot_script(figure_id, path), file=out)


def cmd_oracle(args, out):
    f = parse(args.expr)
    order = parse_order(args.alpha)
    closed = local.fod_value(f, order, args.x)
    limit = local.fod_limit_oracle(f, order, args.x, raw=args.raw, **_oracle_kwargs(args))
    diff = abs(limit.value - closed.value)
    print(f"oracle      {format_cvalue(limit)}", file=out)
    print(f"closed form {format_cvalue(closed)}", file=out)
    print(f"abs diff    {diff:.3e}", file=out)


def _add_numeric_flags(p):
    p.add_argument("--a", type=float, default=0.0, help="lower limit for rl/caputo")
    p.add_argument("--m", type=float, default=None, help="monomial power for euler")
    p.add_argument("--c", type=float, default=None, help="monomial coefficient for euler")
    p.add_argument("--panels", type=int, default=QuadratureConfig().panels)
    p.add_argument("--scheme", choices=("product", "gl"), default="product")
    p.add_argument("--h0", type=float, default=local.DEFAULT_H0)
    p.add_argument("--levels", type=int, default=local.DEFAULT_LEVELS)
    p.add_argument("--tol", type=float, default=local.DEFAULT_TOL)


def _add_grid_flags(p):
    p.add_argument("--min", type=float, required=True)
    p.add_argument("--max", type=float, required=True)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fodkit", description="Fractional-order derivatives")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one derivative value")
    p.add_argument("--expr", required=True)
    p.add_argument("--method", choices=METHODS, default="karci")
    p.add_argument("--alpha", required=True, help="order, e.g. 0.5 or 2/3")
    p.add_argument("--x", type=float, required=True)
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("grid", help="evaluate over a uniform grid to CSV")
    p.add_argument("--expr", required=True)
    p.add_argument("--method", choices=METHODS, default="karci")
    p.add_argument("--alpha", required=True)
    _add_grid_flags(p)
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("compare", help="all methods over a grid to CSV")
    p.add_argument("--expr", required=True)
    p.add_argument("--alpha", required=True)
    _add_grid_flags(p)
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("figure", help="write figure data CSV")
    p.add_argument("--id", required=True, help="1..16 or 'all'")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--gnuplot", action="store_true", help="also write a gnuplot script")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("oracle", help="limit oracle against the closed form")
    p.add_argument("--expr", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--raw", action="store_true", help="extrapolate the unresolved ratio")
    _add_numeric_flags(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        print(f"no convergence: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (FodError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
