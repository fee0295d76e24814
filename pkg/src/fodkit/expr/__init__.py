"""Parsing, printing, evaluation and symbolic differentiation of f(x)."""

from .derivative import derivative, provably_positive
from .evaluate import DOMAIN_ERROR, OK, POLE, EvalResult, evaluate, evaluate_array, evaluate_value
from .nodes import (
    FUNCTIONS,
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
    X,
)
from .parser import parse
from .printer import to_string

__all__ = [
    "FUNCTIONS", "Add", "Const", "Div", "Expr", "Func", "Mul", "Neg", "Pow",
    "PowBase", "Sub", "Var", "X",
    "parse", "to_string",
    "EvalResult", "OK", "DOMAIN_ERROR", "POLE",
    "evaluate", "evaluate_array", "evaluate_value",
    "derivative", "provably_positive",
]
