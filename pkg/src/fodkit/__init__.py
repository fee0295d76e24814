"""Fractional-order derivatives: the local ratio-limit operator plus the
classical Euler, Riemann-Liouville and Caputo operators."""

from .classical import (
    ClassicalParams,
    QuadratureConfig,
    caputo_fod,
    euler_fod,
    reference_value,
    rl_fod,
)
from .errors import ConvergenceError, DomainError, FodError, ParseError, PoleError
from .expr import Expr, derivative, evaluate, parse, to_string
from .gamma import gamma_fn
from .local import FodPoint, classify, fod_limit_oracle, fod_symbolic, fod_value
from .order import CValue, FractionalOrder, parse_order
from .properties import finiteness_check, monotone_direction, ordering_check

__version__ = "0.1.0"

__all__ = [
    "ClassicalParams", "QuadratureConfig", "caputo_fod", "euler_fod", "reference_value", "rl_fod",
    "ConvergenceError", "DomainError", "FodError", "ParseError", "PoleError",
    "Expr", "derivative", "evaluate", "parse", "to_string",
    "gamma_fn",
    "FodPoint", "classify", "fod_limit_oracle", "fod_symbolic", "fod_value",
    "CValue", "FractionalOrder", "parse_order",
    "finiteness_check", "monotone_direction", "ordering_check",
]
