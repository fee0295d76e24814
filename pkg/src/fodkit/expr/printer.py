"""Infix printer whose output re-parses to the same tree."""

from __future__ import annotations

import math

from .nodes import Add, Const, Div, Expr, Func, Mul, Neg, Pow, PowBase, Sub, Var

# Binding strength; higher binds tighter.
_ADD, _MUL, _NEG, _POW, _ATOM = 1, 2, 3, 4, 5


def format_number(value: float) -> str:
    if math.isfinite(value) and value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _prec(e):
    if isinstance(e, (Add, Sub)):
        return _ADD
    if isinstance(e, (Mul, Div)):
        return _MUL
    if isinstance(e, Neg):
        return _NEG
    if isinstance(e, (Pow, PowBase)):
        return _POW
    if isinstance(e, Const) and (e.value < 0 or math.copysign(1.0, e.value) < 0):
        return _NEG
    return _ATOM


def _wrap(e, min_prec):
    text = to_string(e)
    return f"({text})" if _prec(e) < min_prec else text


def to_string(e: Expr) -> str:
    if isinstance(e, Const):
        if e.value < 0 or math.copysign(1.0, e.value) < 0:
            return "-" + format_number(-e.value)
        return format_number(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Add):
        return f"{_wrap(e.left, _ADD)} + {_wrap(e.right, _MUL)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, _ADD)} - {_wrap(e.right, _MUL)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, _MUL)}*{_wrap(e.right, _NEG)}"
    if isinstance(e, Div):
        return f"{_wrap(e.left, _MUL)}/{_wrap(e.right, _NEG)}"
    if isinstance(e, Neg):
        return f"-{_wrap(e.arg, _NEG)}"
    if isinstance(e, Pow):
        # A bare literal base would re-parse as powbase or exp, so bracket it.
        if isinstance(e.base, Const):
            base = f"({to_string(e.base)})"
        else:
            base = _wrap(e.base, _ATOM)
        return f"{base}^{_wrap(e.exponent, _NEG)}"
    if isinstance(e, PowBase):
        return f"{format_number(e.base)}^{_wrap(e.arg, _NEG)}"
    if isinstance(e, Func):
        return f"{e.name}({to_string(e.arg)})"
    raise TypeError(f"not an expression: {e!r}")
