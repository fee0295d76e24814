"""Local fractional-order derivative defined by a ratio limit.

For order alpha the derivative of f at x is the limit as h -> 0 of

    (f(x+h)**alpha - f(x)**alpha) / ((x+h)**alpha - x**alpha),

which is 0/0 at h = 0.  Differentiating numerator and denominator in h gives
the quotient ``f'(x+h) * (f(x+h)/(x+h))**(alpha-1)`` and the closed form

    f'(x) * (f(x)/x)**(alpha-1).

Order 1 recovers the classical derivative exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .expr import Const, Div, Expr, Pow, Var, derivative, evaluate
from .expr.nodes import mul, power
from .order import CValue, FractionalOrder, branch_power

REAL = "real"
COMPLEX = "complex"

DEFAULT_H0 = 1e-2
DEFAULT_LEVELS = 20
DEFAULT_TOL = 1e-9
# step changes this small relative to the samples are rounding noise
ROUND_OFF_FLOOR = 64 * 2.0**-52


@dataclass(frozen=True)
class FodPoint:
    """Evaluation point and finite probe step for the limit oracle."""

    x: float
    h: float

    def __post_init__(self):
        if not self.h > 0.0:
            raise ValueError("probe step h must be positive")


def _value(f, x):
    return evaluate(f, x).unwrap()


def _scaled_power(fx: float, x: float, dfx: float, order: FractionalOrder) -> complex:
    try:
        return dfx * branch_power(fx / x, order.minus_one())
    except OverflowError:
        raise DomainError("power overflow") from None


def _to_cvalue(z: complex) -> CValue:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("non-finite fractional derivative")
    return CValue(z.real, z.imag)


def fod_value(f: Expr, alpha, x: float, df: Expr | None = None) -> CValue:
    """Closed-form fractional derivative ``f'(x) * (f(x)/x)**(alpha-1)``.

    ``alpha`` may be a FractionalOrder, int, Fraction, float or text such
    as ``"2/3"``.  Pass ``df`` to reuse a precomputed ``derivative(f)``.

    Raises DomainError when x == 0 (alpha != 1) or f is undefined, and
    PoleError when f(x) == 0 with alpha < 1.
    """
    order = FractionalOrder.of(alpha)
    if df is None:
        df = derivative(f)
    x = float(x)
    if order.is_one():
        return CValue(_value(df, x), 0.0)
    if x == 0.0:
        raise DomainError("fractional derivative undefined at x = 0")
    fx = _value(f, x)
    if df == Const(0.0):
        # constant f: the power term is finite for any nonzero f(x)/x, or
        # irrelevant when f == 0, so the result is exactly zero
        return CValue(0.0, 0.0)
    dfx = _value(df, x)
    return _to_cvalue(_scaled_power(fx, x, dfx, order))


def classify(f: Expr, alpha, x: float) -> str:
    """``"real"`` when the fractional derivative at x has zero imaginary part."""
    return REAL if fod_value(f, alpha, x).is_real else COMPLEX


def _is_variable_power(f):
    return isinstance(f, Pow) and isinstance(f.base, Var) and isinstance(f.exponent, Const)


def fod_symbolic(f: Expr, alpha) -> Expr:
    """Symbolic fractional derivative ``derivative(f) * (f/x)^(alpha-1)``.

    ``x^n`` is written with the ratio already reduced to ``x^(n-1)``.
    """
    order = FractionalOrder.of(alpha)
    df = derivative(f)
    if order.is_one():
        return df
    if _is_variable_power(f):
        ratio = power(Var(), Const(f.exponent.value - 1.0))
    else:
        ratio = Div(f, Var())
    return mul(df, power(ratio, Const(float(order.minus_one()))))


def post_lhospital_quotient(f: Expr, alpha, point: FodPoint, df: Expr | None = None) -> complex:
    """``f'(x+h) * (f(x+h)/(x+h))**(alpha-1)`` at a finite step."""
    order = FractionalOrder.of(alpha)
    if df is None:
        df = derivative(f)
    xh = point.x + point.h
    if order.is_one():
        return complex(_value(df, xh), 0.0)
    if xh == 0.0:
        raise DomainError("probe point hit x = 0")
    return _scaled_power(_value(f, xh), xh, _value(df, xh), order)


def raw_quotient(f: Expr, alpha, point: FodPoint) -> complex:
    """Un-resolved ratio ``(f(x+h)^a - f(x)^a) / ((x+h)^a - x^a)`` at a finite step.

    Diagnostic only; it is 0/0 as h -> 0 and loses digits for tiny h.
    """
    order = FractionalOrder.of(alpha)
    a = order.ratio if order.is_rational else order.alpha
    x, xh = point.x, point.x + point.h
    num = branch_power(_value(f, xh), a) - branch_power(_value(f, x), a)
    den = branch_power(xh, a) - branch_power(x, a)
    if den == 0:
        raise DomainError("raw quotient denominator vanished")
    return num / den


def richardson(values, ratio: float = 2.0, order: int = 1, tol: float = DEFAULT_TOL):
    """Extrapolate ``values[k] = q(h0 / ratio**k)`` to h = 0.

    Builds the Richardson tableau row by row assuming an error expansion in
    powers ``h**order, h**(order+1), ...``.  Returns ``(estimate, error)``
    for the first diagonal step that changes by no more than
    ``tol * |estimate|``, or by no more than a round-off floor scaled to
    the largest sample; raises ConvergenceError if none does.
    """
    best_err = math.inf
    prev_row = None
    prev_diag = None
    scale = 0.0
    for k, q in enumerate(values):
        scale = max(scale, abs(q))
        row = [q]
        if prev_row is not None:
            for j in range(1, k + 1):
                factor = ratio ** (order + j - 1)
                row.append(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0))
        diag = row[-1]
        if prev_diag is not None:
            err = abs(diag - prev_diag)
            best_err = min(best_err, err)
            if err <= tol * abs(diag) or err <= ROUND_OFF_FLOOR * scale:
                return diag, err
        prev_row, prev_diag = row, diag
    raise ConvergenceError(
        f"Richardson extrapolation did not settle (best step change {best_err:.3g})"
    )


def fod_limit_oracle(
    f: Expr,
    alpha,
    x: float,
    h0: float = DEFAULT_H0,
    levels: int = DEFAULT_LEVELS,
    tol: float = DEFAULT_TOL,
    raw: bool = False,
) -> CValue:
    """Limit h -> 0 of the L'Hospital-resolved quotient by Richardson extrapolation.

    Samples the quotient at ``h_k = h0 * 2**-k`` for ``k = 0..levels``.  With
    ``raw=True`` the unresolved difference ratio is extrapolated instead.
    Domain failures at any probe raise DomainError/PoleError; a tableau that
    never settles raises ConvergenceError.
    """
    order = FractionalOrder.of(alpha)
    x = float(x)
    if not order.is_one() and x == 0.0:
        raise DomainError("fractional derivative undefined at x = 0")
    df = derivative(f)
    quotient = raw_quotient if raw else post_lhospital_quotient

    def samples():
        for k in range(levels + 1):
            point = FodPoint(x, h0 * 2.0**-k)
            if raw:
                yield quotient(f, order, point)
            else:
                yield quotient(f, order, point, df)

    estimate, _ = richardson(samples(), tol=tol)
    return _to_cvalue(complex(estimate))


__all__ = [
    "COMPLEX",
    "REAL",
    "FodPoint",
    "classify",
    "fod_limit_oracle",
    "fod_symbolic",
    "fod_value",
    "post_lhospital_quotient",
    "raw_quotient",
    "richardson",
]
