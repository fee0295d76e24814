"""Executable checks of the ordering and finiteness properties.

At a fixed x with r = f(x)/x > 0, the fractional derivative as a function
of the order is ``f'(x) * r**(alpha-1)``: monotone in alpha, increasing
exactly when ``f'(x) * ln(r) > 0``.  The ordering claims for positive
monotone functions (increasing f => derivative increasing in alpha,
decreasing f => decreasing in alpha) therefore hold only where r >= 1.
Points with r < 1 are reported as ``skipped`` rather than violations.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import asdict, dataclass, field

from .errors import DomainError, FodError
from .expr import Expr, derivative, evaluate, to_string
from .local import fod_value
from .order import FractionalOrder

ASCENDING = "ascending"
DESCENDING = "descending"

ORDERED_ASCENDING = "ordered-ascending"
ORDERED_DESCENDING = "ordered-descending"
VIOLATED = "violated"
SKIPPED = "skipped"

NONDECREASING = "nondecreasing-in-alpha"
NONINCREASING = "nonincreasing-in-alpha"
CONSTANT = "constant-in-alpha"

TIE_TOL = 1e-12


@dataclass
class PointVerdict:
    x: float
    verdict: str
    reason: str = ""
    values: list[float] = field(default_factory=list)


@dataclass
class OrderingReport:
    function: str
    alphas: list[str]
    expect: str
    points: list[PointVerdict]

    @property
    def grid(self) -> list[float]:
        return [p.x for p in self.points]

    @property
    def verdicts(self) -> list[str]:
        return [p.verdict for p in self.points]

    @property
    def values(self) -> list[list[float]]:
        return [p.values for p in self.points]

    @property
    def counts(self) -> dict[str, int]:
        out = {ORDERED_ASCENDING: 0, ORDERED_DESCENDING: 0, VIOLATED: 0, SKIPPED: 0}
        for p in self.points:
            out[p.verdict] += 1
        return out

    def to_json(self) -> str:
        data = {
            "function": self.function,
            "alphas": self.alphas,
            "expect": self.expect,
            "counts": self.counts,
            "points": [asdict(p) for p in self.points],
        }
        return json.dumps(data, indent=2, allow_nan=True)

    def to_csv(self) -> str:
        """Long-format CSV: one row per (x, alpha), classification = verdict."""
        from .csvio import CsvRecord, write_records

        records = []
        for p in self.points:
            for alpha, v in zip(self.alphas, p.values or [math.nan] * len(self.alphas)):
                records.append(CsvRecord(p.x, f"alpha={alpha}", v, 0.0, p.verdict))
        buf = io.StringIO(newline="")
        write_records(buf, records)
        return buf.getvalue()


def _nondecreasing(values):
    return all(b >= a - TIE_TOL * (1.0 + abs(a)) for a, b in zip(values, values[1:]))


def _nonincreasing(values):
    return all(b <= a + TIE_TOL * (1.0 + abs(a)) for a, b in zip(values, values[1:]))


def ordering_check(f: Expr, alphas, grid, expect: str = ASCENDING) -> OrderingReport:
    """Check that the derivative is ordered in alpha at every grid point.

    ``expect`` is the direction claimed for the function (``ascending`` for
    positive increasing f, ``descending`` for positive decreasing f).  A
    point is ``skipped`` when f(x)/x < 1 or the values are not real, and
    ``violated`` when it is applicable but the values are not ordered in
    the expected direction.
    """
    if expect not in (ASCENDING, DESCENDING):
        raise ValueError(f"expect must be {ASCENDING!r} or {DESCENDING!r}")
    orders = [FractionalOrder.of(a) for a in alphas]
    if any(b.alpha <= a.alpha for a, b in zip(orders, orders[1:])):
        raise ValueError("alphas must be strictly ascending")
    df = derivative(f)
    points = []
    for x in grid:
        x = float(x)
        try:
            ratio = evaluate(f, x).unwrap() / x
            values = [fod_value(f, o, x, df) for o in orders]
        except (FodError, ZeroDivisionError) as exc:
            points.append(PointVerdict(x, SKIPPED, f"evaluation failed: {exc}"))
            continue
        if any(not v.is_real for v in values):
            points.append(PointVerdict(x, SKIPPED, "complex-valued derivative"))
            continue
        reals = [v.re for v in values]
        if ratio < 1.0:
            points.append(PointVerdict(x, SKIPPED, f"f(x)/x = {ratio:.6g} < 1", reals))
            continue
        up, down = _nondecreasing(reals), _nonincreasing(reals)
        if expect == ASCENDING and up:
            points.append(PointVerdict(x, ORDERED_ASCENDING, values=reals))
        elif expect == DESCENDING and down:
            points.append(PointVerdict(x, ORDERED_DESCENDING, values=reals))
        else:
            seen = "descending" if down else ("ascending" if up else "unordered")
            points.append(PointVerdict(x, VIOLATED, f"values are {seen}", reals))
    return OrderingReport(to_string(f), [str(o) for o in orders], expect, points)


def monotone_direction(f: Expr, x: float) -> str:
    """Direction of alpha -> f'(x) (f(x)/x)**(alpha-1) at a point with f(x)/x > 0."""
    x = float(x)
    if x == 0.0:
        raise DomainError("x = 0")
    ratio = evaluate(f, x).unwrap() / x
    if not ratio > 0.0:
        raise DomainError(f"f(x)/x = {ratio:g} is not positive; direction undefined over the reals")
    slope = evaluate(derivative(f), x).unwrap()
    sign = slope * math.log(ratio)
    if slope == 0.0 or ratio == 1.0 or sign == 0.0:
        return CONSTANT
    return NONDECREASING if sign > 0.0 else NONINCREASING


@dataclass
class FinitenessReport:
    function: str
    alpha: str
    checked: int
    failures: list[tuple[float, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def finiteness_check(f: Expr, alpha, grid) -> FinitenessReport:
    """Evaluate the derivative on ``grid`` and list every non-finite point."""
    order = FractionalOrder.of(alpha)
    df = derivative(f)
    grid = [float(x) for x in grid]
    failures = []
    for x in grid:
        x = float(x)
        try:
            v = fod_value(f, order, x, df)
        except FodError as exc:
            failures.append((x, f"{type(exc).__name__}: {exc}"))
            continue
        if not (math.isfinite(v.re) and math.isfinite(v.im)):
            failures.append((x, "non-finite value"))
    return FinitenessReport(to_string(f), str(order), len(grid), failures)
