"""Symbolic first derivative with respect to x."""

from __future__ import annotations

import math

from ..errors import DomainError
from .nodes import (
    Add,
    Const,
    Div,
    Expr,
    Func,
    Mul,
    Neg,
    Pow,
    PowBase,
    Sub,
    Var,
    add,
    const_value,
    div,
    func,
    mul,
    neg,
    power,
    sub,
)


def provably_positive(e: Expr) -> bool:
    """Conservative test that ``e`` is > 0 wherever it is defined."""
    value = const_value(e)
    if value is not None:
        return value > 0.0
    if isinstance(e, PowBase):
        return True
    if isinstance(e, Func) and e.name == "exp":
        return True
    if isinstance(e, (Add, Mul, Div)):
        return provably_positive(e.left) and provably_positive(e.right)
    if isinstance(e, Pow):
        return provably_positive(e.base)
    return False


def _chain(outer: Expr, inner: Expr) -> Expr:
    return mul(outer, derivative(inner))


def _func_derivative(name, u):
    fu = Func(name, u)
    if name == "sin":
        return func("cos", u)
    if name == "cos":
        return neg(func("sin", u))
    if name == "tan":
        return add(Const(1.0), power(fu, Const(2.0)))
    if name == "cot":
        return neg(add(Const(1.0), power(fu, Const(2.0))))
    if name == "sec":
        return mul(fu, func("tan", u))
    if name == "csc":
        return neg(mul(fu, func("cot", u)))
    if name == "exp":
        return fu
    if name == "ln":
        return div(Const(1.0), u)
    raise ValueError(name)


def derivative(f: Expr) -> Expr:
    """Exact symbolic d/dx of ``f`` with constant folding.

    Powers ``u^g`` with an x-dependent exponent are differentiated through
    ``exp(g*ln(u))``; that is refused (``DomainError``) unless ``u`` is
    provably positive, since the real derivative does not exist otherwise.
    """
    if not f.contains_x():
        return Const(0.0)
    if isinstance(f, Var):
        return Const(1.0)
    if isinstance(f, Add):
        return add(derivative(f.left), derivative(f.right))
    if isinstance(f, Sub):
        return sub(derivative(f.left), derivative(f.right))
    if isinstance(f, Neg):
        return neg(derivative(f.arg))
    if isinstance(f, Mul):
        u, v = f.left, f.right
        return add(mul(derivative(u), v), mul(u, derivative(v)))
    if isinstance(f, Div):
        u, v = f.left, f.right
        if not u.contains_x():
            # (c/v)' = -c*v'/v^2
            return neg(div(mul(u, derivative(v)), power(v, Const(2.0))))
        if not v.contains_x():
            return div(derivative(u), v)
        num = sub(mul(derivative(u), v), mul(u, derivative(v)))
        return div(num, power(v, Const(2.0)))
    if isinstance(f, Pow):
        u, g = f.base, f.exponent
        n = const_value(g)
        if n is not None:
            return _chain(mul(Const(n), power(u, Const(n - 1.0))), u)
        if not provably_positive(u):
            raise DomainError(f"cannot differentiate {f} : base may be non-positive")
        # d(u^g) = u^g * (g' ln u + g u'/u)
        inner = add(mul(derivative(g), func("ln", u)), div(mul(g, derivative(u)), u))
        return mul(f, inner)
    if isinstance(f, PowBase):
        return _chain(mul(f, Const(math.log(f.base))), f.arg)
    if isinstance(f, Func):
        return _chain(_func_derivative(f.name, f.arg), f.arg)
    raise TypeError(f"not an expression: {f!r}")
