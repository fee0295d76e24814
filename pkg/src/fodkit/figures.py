"""Data-level reproduction of the figure series as CSV.

Figures 1-3 are the classical-operator demonstrations on f = c and f = x,
sampled at the integer points i = 1..100 used by the original plotting
code.  Where that code's closed form differs from a direct evaluation of
the operator (the Riemann-Liouville sign for constants, and the
Riemann-Liouville expression for f = x), both are emitted: the plain series
is the analytic value, the ``/code`` series is the original expression.
Negative bases in the original expressions take the principal complex
value, as the plotting environment does.

Figures 4-16 sample the local fractional derivative at several orders plus
the function itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .classical import CAPUTO, CONSTANT, EULER, IDENTITY, RL, ClassicalParams, reference_value
from .csvio import CsvRecord, write_records
from .errors import FodError, PoleError
from .expr import derivative, evaluate, parse
from .gamma import gamma_fn
from .local import fod_value
from .order import FractionalOrder, branch_power

CONSTANTS = (5.0, 10.0, -5.0, -10.0)
TWO_THIRDS = Fraction(2, 3)

POSITIVE_ORDERS = ("-1/2", "1/2", "1", "3/2", "5/2")
NEGATIVE_ORDERS = ("-5/2", "-2", "-3/2", "-1", "-1/2")
GALLERY_ORDERS = ("1/2", "1", "3/2", "2", "5/2")


@dataclass(frozen=True)
class FigureSpec:
    id: int
    title: str
    kind: str
    functions: tuple[str, ...] = ()
    alphas: tuple[str, ...] = ()
    grid: tuple[float, float, int] = (1.0, 100.0, 100)
    params: dict = field(default_factory=dict)

    def xs(self) -> np.ndarray:
        lo, hi, count = self.grid
        return np.linspace(lo, hi, count)


FIGURES = {
    1: FigureSpec(1, "Euler derivative of f(x) = c", "euler-constant",
                  alphas=("2/3",), params={"c": CONSTANTS}),
    2: FigureSpec(2, "Riemann-Liouville derivative of f(x) = c", "rl-constant",
                  alphas=("2/3",), params={"c": CONSTANTS, "a": 0.5}),
    3: FigureSpec(3, "Euler, Riemann-Liouville and Caputo derivatives of f(x) = x",
                  "classical-identity", functions=("x",), alphas=("2/3",), params={"a": 2.5}),
    4: FigureSpec(4, "x^2+3x+4", "local", ("x^2+3*x+4",), POSITIVE_ORDERS, (0.5, 10.0, 200)),
    5: FigureSpec(5, "1/(x^2+3x+4)", "local", ("1/(x^2+3*x+4)",), POSITIVE_ORDERS, (0.005, 1.0, 200)),
    6: FigureSpec(6, "x^2+3x+0.001", "local", ("x^2+3*x+0.001",), NEGATIVE_ORDERS, (0.001, 0.1, 200)),
    7: FigureSpec(7, "1/(x^2+3x+0.001)", "local", ("1/(x^2+3*x+0.001)",), NEGATIVE_ORDERS, (0.001, 0.1, 200)),
    8: FigureSpec(8, "sin(x)", "local", ("sin(x)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    9: FigureSpec(9, "cos(x)", "local", ("cos(x)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    10: FigureSpec(10, "tan(x)", "local", ("tan(x)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    11: FigureSpec(11, "cot(x)", "local", ("cot(x)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    12: FigureSpec(12, "x^4-5x^3+x-2", "local", ("x^4-5*x^3+x-2",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    13: FigureSpec(13, "1/(x^4-5x^3+x-2)", "local", ("1/(x^4-5*x^3+x-2)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    14: FigureSpec(14, "ln(x)", "local", ("ln(x)",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    15: FigureSpec(15, "e^x", "local", ("e^x",), GALLERY_ORDERS, (0.1, 10.0, 200)),
    16: FigureSpec(16, "2^x", "local", ("2^x",), GALLERY_ORDERS, (0.1, 10.0, 200)),
}


def get_figure(figure_id: int) -> FigureSpec:
    try:
        return FIGURES[int(figure_id)]
    except KeyError:
        raise ValueError(f"figure id must be in 1..16, got {figure_id}") from None


def _record(x, series, z, classification=None):
    z = complex(z)
    if classification is None:
        classification = "real" if z.imag == 0.0 else "complex"
    return CsvRecord(float(x), series, z.real, z.imag, classification)


def _integer_grid():
    return [float(i) for i in range(1, 101)]


def _euler_constant(spec):
    records = []
    for c in spec.params["c"]:
        for i in _integer_grid():
            p = ClassicalParams(0.0, i, TWO_THIRDS)
            records.append(_record(i, f"c={c:g}", reference_value(EULER, CONSTANT, p, c)))
    return records


def _rl_constant(spec):
    a = spec.params["a"]
    g = gamma_fn(1.0 / 3.0)
    records = []
    for c in spec.params["c"]:
        for i in _integer_grid():
            p = ClassicalParams(a, i, TWO_THIRDS)
            records.append(_record(i, f"c={c:g}", reference_value(RL, CONSTANT, p, c)))
        for i in _integer_grid():
            code = c * ((1.0 / g) * (-1.0 / branch_power(i - a, 2.0 / 3.0)))
            records.append(_record(i, f"c={c:g}/code", code))
    return records


def _classical_identity(spec):
    a = spec.params["a"]
    g = gamma_fn(1.0 / 3.0)
    euler_coeff = gamma_fn(2.0) / gamma_fn(4.0 / 3.0)
    records = []
    for i in _integer_grid():
        records.append(_record(i, "euler", euler_coeff * i ** (1.0 / 3.0)))
    for method, name in ((RL, "rl"), (CAPUTO, "caputo")):
        for i in _integer_grid():
            if i > a:
                p = ClassicalParams(a, i, TWO_THIRDS)
                records.append(_record(i, name, reference_value(method, IDENTITY, p)))
    for i in _integer_grid():
        s = i - a
        rl_code = (1.0 / g) * (3.0 * a * branch_power(s, 2.0 / 3.0) + (9.0 / 4.0) * branch_power(s, 4.0 / 3.0))
        records.append(_record(i, "rl/code", rl_code))
    for i in _integer_grid():
        records.append(_record(i, "caputo/code", (1.0 / g) * (3.0 * branch_power(i - a, 1.0 / 3.0))))
    return records


def _local(spec):
    f = parse(spec.functions[0])
    df = derivative(f)
    xs = spec.xs()
    records = []
    for alpha in spec.alphas:
        order = FractionalOrder.of(alpha)
        for x in xs:
            try:
                v = fod_value(f, order, x, df)
            except PoleError:
                records.append(CsvRecord(float(x), f"alpha={alpha}", math.nan, math.nan, "pole"))
            except FodError:
                records.append(CsvRecord(float(x), f"alpha={alpha}", math.nan, math.nan, "domain_error"))
            else:
                records.append(_record(x, f"alpha={alpha}", v.value))
    for x in xs:
        r = evaluate(f, x)
        if r.ok:
            records.append(_record(x, "f(x)", r.value))
        else:
            records.append(CsvRecord(float(x), "f(x)", math.nan, math.nan, r.status))
    return records


_BUILDERS = {
    "euler-constant": _euler_constant,
    "rl-constant": _rl_constant,
    "classical-identity": _classical_identity,
    "local": _local,
}


def figure_records(figure_id: int) -> list[CsvRecord]:
    spec = get_figure(figure_id)
    return _BUILDERS[spec.kind](spec)


def write_figure(figure_id: int, out_dir) -> Path:
    """Write ``figure_XX.csv`` into ``out_dir`` and return its path."""
    records = figure_records(figure_id)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"figure_{int(figure_id):02d}.csv"
    with open(path, "w", newline="", encoding="utf-8") as fh:
        write_records(fh, records, classification=True)
    return path


def write_gnuplot_script(figure_id: int, csv_path) -> Path:
    """Companion gnuplot script that plots the real part of every series."""
    spec = get_figure(figure_id)
    csv_path = Path(csv_path)
    series = list(dict.fromkeys(r.series for r in figure_records(figure_id)))
    lines = [
        "set datafile separator ','",
        f"set title '{spec.title}'",
        "set key outside",
        "set terminal pngcairo size 900,600",
        f"set output '{csv_path.with_suffix('.png').name}'",
    ]
    plots = [
        f"'{csv_path.name}' using (stringcolumn(2) eq '{s}' ? $1 : 1/0):3 with lines title '{s}'"
        for s in series
    ]
    lines.append("plot " + ", \\\n     ".join(plots))
    path = csv_path.with_suffix(".gp")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
