"""Immutable expression tree over the single real variable ``x``."""

from __future__ import annotations

import math
from dataclasses import dataclass

FUNCTIONS = ("sin", "cos", "tan", "cot", "sec", "csc", "exp", "ln")


class Expr:
    """Base class of all expression nodes.

    Nodes are frozen dataclasses, so equality is structural and trees can
    be shared freely between threads.
    """

    __slots__ = ()

    def __str__(self):
        from .printer import to_string

        return to_string(self)

    def contains_x(self) -> bool:
        return any(child.contains_x() for child in self.children())

    def children(self) -> tuple[Expr, ...]:
        return ()


@dataclass(frozen=True, slots=True)
class Const(Expr):
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))


@dataclass(frozen=True, slots=True)
class Var(Expr):
    def contains_x(self):
        return True


@dataclass(frozen=True, slots=True)
class Add(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Sub(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Div(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True, slots=True)
class Pow(Expr):
    base: Expr
    exponent: Expr

    def children(self):
        return (self.base, self.exponent)


@dataclass(frozen=True, slots=True)
class Neg(Expr):
    arg: Expr

    def children(self):
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class Func(Expr):
    """One of the unary functions listed in ``FUNCTIONS``."""

    name: str
    arg: Expr

    def __post_init__(self):
        if self.name not in FUNCTIONS:
            raise ValueError(f"unknown function {self.name!r}")

    def children(self):
        return (self.arg,)


@dataclass(frozen=True, slots=True)
class PowBase(Expr):
    """``base ** arg`` with a fixed positive literal base other than 1."""

    base: float
    arg: Expr

    def __post_init__(self):
        base = float(self.base)
        if not (base > 0.0 and base != 1.0 and math.isfinite(base)):
            raise ValueError(f"powbase needs a positive base != 1, got {base!r}")
        object.__setattr__(self, "base", base)

    def children(self):
        return (self.arg,)


X = Var()


def const_value(e: Expr) -> float | None:
    """Value of an x-free subtree, or None when it depends on x or is undefined."""
    if e.contains_x():
        return None
    from .evaluate import evaluate

    result = evaluate(e, 0.0)
    return result.value if result.ok else None


# Smart constructors used by derivative/symbolic code.  They fold constants
# and drop additive/multiplicative identities; the parser never uses them.

def _c(e):
    return e.value if isinstance(e, Const) else None


def add(a: Expr, b: Expr) -> Expr:
    ca, cb = _c(a), _c(b)
    if ca is not None and cb is not None:
        return Const(ca + cb)
    if ca == 0.0:
        return b
    if cb == 0.0:
        return a
    if isinstance(b, Neg):
        return sub(a, b.arg)
    return Add(a, b)


def sub(a: Expr, b: Expr) -> Expr:
    ca, cb = _c(a), _c(b)
    if ca is not None and cb is not None:
        return Const(ca - cb)
    if cb == 0.0:
        return a
    if ca == 0.0:
        return neg(b)
    return Sub(a, b)


def neg(a: Expr) -> Expr:
    ca = _c(a)
    if ca is not None:
        return Const(-ca)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def mul(a: Expr, b: Expr) -> Expr:
    ca, cb = _c(a), _c(b)
    if ca is not None and cb is not None:
        return Const(ca * cb)
    if ca == 0.0 or cb == 0.0:
        return Const(0.0)
    if ca == 1.0:
        return b
    if cb == 1.0:
        return a
    if ca == -1.0:
        return neg(b)
    if cb == -1.0:
        return neg(a)
    if cb is not None:
        return mul(b, a)
    if ca is not None and isinstance(b, Mul) and isinstance(b.left, Const):
        return mul(Const(ca * b.left.value), b.right)
    if isinstance(a, Neg):
        return neg(mul(a.arg, b))
    if isinstance(b, Neg):
        return neg(mul(a, b.arg))
    return Mul(a, b)


def div(a: Expr, b: Expr) -> Expr:
    ca, cb = _c(a), _c(b)
    if ca is not None and cb is not None and cb != 0.0:
        return Const(ca / cb)
    if ca == 0.0 and cb != 0.0:
        return Const(0.0)
    if cb == 1.0:
        return a
    if isinstance(a, Neg):
        return neg(div(a.arg, b))
    return Div(a, b)


def power(a: Expr, b: Expr) -> Expr:
    ca, cb = _c(a), _c(b)
    if cb == 0.0:
        return Const(1.0)
    if cb == 1.0:
        return a
    if ca is not None and cb is not None:
        try:
            value = ca**cb
        except (OverflowError, ZeroDivisionError):
            return Pow(a, b)
        if isinstance(value, float) and math.isfinite(value):
            return Const(value)
    return Pow(a, b)


def func(name: str, a: Expr) -> Expr:
    node = Func(name, a)
    if isinstance(a, Const):
        value = const_value(node)
        if value is not None:
            return Const(value)
    return node
