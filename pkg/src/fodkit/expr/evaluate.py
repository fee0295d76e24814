"""Real-valued evaluation of expression trees."""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, PoleError
from .nodes import Add, Const, Div, Expr, Func, Mul, Neg, Pow, PowBase, Sub, Var

OK = "ok"
DOMAIN_ERROR = "domain_error"
POLE = "pole"

_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class EvalResult:
    value: float
    status: str = OK

    @property
    def ok(self) -> bool:
        return self.status == OK

    def unwrap(self) -> float:
        """Return the value or raise the matching exception."""
        if self.status == POLE:
            raise PoleError("pole in expression")
        if self.status != OK:
            raise DomainError("expression undefined at this point")
        return self.value


class _Fail(Exception):
    def __init__(self, status):
        self.status = status


def _near_zero(value, arg):
    # Trig poles are never hit exactly in floating point; treat a vanishing
    # sin/cos within rounding of the argument as the pole itself.
    return abs(value) <= 8.0 * _EPS * max(1.0, abs(arg))


def _real_pow(a, b):
    if a == 0.0:
        if b < 0.0:
            raise _Fail(POLE)
        return 0.0 if b > 0.0 else 1.0
    if a < 0.0 and not float(b).is_integer():
        raise _Fail(DOMAIN_ERROR)
    try:
        return math.pow(a, b)
    except (OverflowError, ValueError):
        raise _Fail(DOMAIN_ERROR) from None


def _eval_func(name, u):
    if name == "sin":
        return math.sin(u)
    if name == "cos":
        return math.cos(u)
    if name == "exp":
        try:
            return math.exp(u)
        except OverflowError:
            raise _Fail(DOMAIN_ERROR) from None
    if name == "ln":
        if u <= 0.0:
            raise _Fail(DOMAIN_ERROR)
        return math.log(u)
    s, c = math.sin(u), math.cos(u)
    if name in ("tan", "sec"):
        if _near_zero(c, u):
            raise _Fail(POLE)
        return s / c if name == "tan" else 1.0 / c
    if _near_zero(s, u):
        raise _Fail(POLE)
    return c / s if name == "cot" else 1.0 / s


def _eval(e, x):
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Var):
        return x
    if isinstance(e, Add):
        return _eval(e.left, x) + _eval(e.right, x)
    if isinstance(e, Sub):
        return _eval(e.left, x) - _eval(e.right, x)
    if isinstance(e, Mul):
        return _eval(e.left, x) * _eval(e.right, x)
    if isinstance(e, Div):
        num = _eval(e.left, x)
        den = _eval(e.right, x)
        if den == 0.0:
            raise _Fail(DOMAIN_ERROR)
        return num / den
    if isinstance(e, Neg):
        return -_eval(e.arg, x)
    if isinstance(e, Pow):
        return _real_pow(_eval(e.base, x), _eval(e.exponent, x))
    if isinstance(e, PowBase):
        return _real_pow(e.base, _eval(e.arg, x))
    if isinstance(e, Func):
        return _eval_func(e.name, _eval(e.arg, x))
    raise TypeError(f"not an expression: {e!r}")


def evaluate(f: Expr, x: float) -> EvalResult:
    """Evaluate ``f`` at ``x`` with real semantics.

    Never raises for mathematical failures; those come back as a
    ``domain_error`` or ``pole`` status with a NaN value.
    """
    try:
        value = _eval(f, float(x))
    except _Fail as fail:
        return EvalResult(math.nan, fail.status)
    except (OverflowError, ZeroDivisionError, ValueError):
        return EvalResult(math.nan, DOMAIN_ERROR)
    if not math.isfinite(value):
        return EvalResult(math.nan, DOMAIN_ERROR)
    return EvalResult(value)


def evaluate_value(f: Expr, x: float) -> float:
    """Like :func:`evaluate` but raises on failure."""
    return evaluate(f, x).unwrap()


_NP_FUNCS = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "cot": lambda u: 1.0 / np.tan(u),
    "sec": lambda u: 1.0 / np.cos(u),
    "csc": lambda u: 1.0 / np.sin(u),
    "exp": np.exp,
    "ln": np.log,
}


def _eval_array(e, xs):
    if isinstance(e, Const):
        return np.full_like(xs, e.value)
    if isinstance(e, Var):
        return xs
    if isinstance(e, Add):
        return _eval_array(e.left, xs) + _eval_array(e.right, xs)
    if isinstance(e, Sub):
        return _eval_array(e.left, xs) - _eval_array(e.right, xs)
    if isinstance(e, Mul):
        return _eval_array(e.left, xs) * _eval_array(e.right, xs)
    if isinstance(e, Div):
        return _eval_array(e.left, xs) / _eval_array(e.right, xs)
    if isinstance(e, Neg):
        return -_eval_array(e.arg, xs)
    if isinstance(e, Pow):
        return np.power(_eval_array(e.base, xs), _eval_array(e.exponent, xs))
    if isinstance(e, PowBase):
        return np.power(e.base, _eval_array(e.arg, xs))
    if isinstance(e, Func):
        return _NP_FUNCS[e.name](_eval_array(e.arg, xs))
    raise TypeError(f"not an expression: {e!r}")


def evaluate_array(f: Expr, xs) -> np.ndarray:
    """Vectorised evaluation; undefined points come back as NaN."""
    xs = np.asarray(xs, dtype=float)
    with np.errstate(all="ignore"):
        out = _eval_array(f, xs)
    out = np.where(np.isfinite(out), out, np.nan)
    return out
