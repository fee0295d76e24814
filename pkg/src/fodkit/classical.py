"""Classical fractional operators: Euler power rule, Riemann-Liouville, Caputo.

The Riemann-Liouville and Caputo paths work for orders 0 < alpha < 1 (so
n = ceil(alpha) = 1).  Order exactly 1 is accepted and returns the ordinary
derivative, which is what both operators reduce to at integer order.

Both numeric paths integrate against the weakly singular kernel
``(t - v)**(-alpha)`` with product trapezoid weights: f is replaced by its
piecewise linear interpolant on a uniform grid and the kernel is integrated
exactly on each panel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError
from .expr import Const, Div, Expr, Mul, Neg, Pow, Var, derivative, evaluate, evaluate_array
from .gamma import gamma_fn, rgamma
from .order import FractionalOrder

EULER, RL, CAPUTO = "euler", "rl", "caputo"
CONSTANT, IDENTITY = "constant", "identity"


@dataclass(frozen=True)
class ClassicalParams:
    """Lower limit ``a``, evaluation point ``t > a`` and order ``alpha``."""

    a: float
    t: float
    alpha: FractionalOrder

    def __post_init__(self):
        object.__setattr__(self, "alpha", FractionalOrder.of(self.alpha))
        if not self.t > self.a:
            raise DomainError(f"need t > a, got a={self.a}, t={self.t}")

    @property
    def n(self) -> int:
        return math.ceil(self.alpha.alpha)


@dataclass(frozen=True)
class QuadratureConfig:
    panels: int = 4096
    levels: tuple[int, ...] = field(default=(256, 512, 1024, 2048, 4096, 8192))

    def __post_init__(self):
        if self.panels < 8:
            raise ValueError("need at least 8 panels")


def _check_order(p: ClassicalParams):
    alpha = p.alpha.alpha
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"numeric RL/Caputo support 0 < alpha <= 1, got {alpha}")
    return alpha


def euler_fod(m: float, alpha, x: float, c: float = 1.0) -> float:
    """Power-rule derivative of ``c * x**m``: ``c Gamma(m+1)/Gamma(m-alpha+1) x**(m-alpha)``."""
    a = float(FractionalOrder.of(alpha))
    if not x > 0.0:
        raise DomainError("Euler power rule needs x > 0")
    return c * gamma_fn(m + 1.0) / gamma_fn(m - a + 1.0) * x ** (m - a)


def _second_difference_pow(k: np.ndarray, p: float) -> np.ndarray:
    # (k+1)^p - 2 k^p + (k-1)^p without the catastrophic cancellation of the
    # direct form: k^p * [expm1(p log1p(1/k)) + expm1(p log1p(-1/k))].
    inv = 1.0 / k
    with np.errstate(divide="ignore"):  # log1p(-1) = -inf gives the exact 0**p
        return k**p * (np.expm1(p * np.log1p(inv)) + np.expm1(p * np.log1p(-inv)))


def product_trapezoid_weights(panels: int, alpha: float) -> np.ndarray:
    """Weights w_j with  int_a^t g(v) (t-v)^-alpha dv ~ h^(1-alpha) * sum w_j g(v_j).

    ``v_j = a + j h`` for j = 0..panels and ``t = v_panels``.
    """
    n = panels
    b = 1.0 - alpha
    p = b + 1.0
    w = np.empty(n + 1)
    w[0] = (n - 1.0) ** p - (n - b - 1.0) * n**b
    if n > 1:
        k = np.arange(n - 1, 0, -1, dtype=float)  # k = n - j for j = 1..n-1
        w[1:n] = _second_difference_pow(k, p)
    w[n] = 1.0
    return w / (b * p)


def weakly_singular_integral(values: np.ndarray, a: float, t: float, alpha: float) -> float:
    """``int_a^t g(v) (t-v)^-alpha dv`` from samples of g on a uniform grid."""
    panels = len(values) - 1
    h = (t - a) / panels
    w = product_trapezoid_weights(panels, alpha)
    return h ** (1.0 - alpha) * math.fsum(w * values)


def _samples(f: Expr, a: float, t: float, panels: int) -> np.ndarray:
    grid = np.linspace(a, t, panels + 1)
    values = evaluate_array(f, grid)
    if not np.all(np.isfinite(values)):
        raise DomainError("integrand undefined somewhere on [a, t]")
    return values


def _fractional_integral(f, a, t, alpha, panels):
    return weakly_singular_integral(_samples(f, a, t, panels), a, t, alpha)


def _grunwald_letnikov(f: Expr, p: ClassicalParams, panels: int, alpha: float) -> float:
    h = (p.t - p.a) / panels
    k = np.arange(1, panels + 1, dtype=float)
    coeffs = np.concatenate(([1.0], np.cumprod(1.0 - (alpha + 1.0) / k)))
    values = evaluate_array(f, p.t - h * np.arange(panels + 1))
    if not np.all(np.isfinite(values)):
        raise DomainError("integrand undefined somewhere on [a, t]")
    return h**-alpha * math.fsum(coeffs * values)


def rl_fod(f: Expr, p: ClassicalParams, q: QuadratureConfig | None = None, scheme: str = "product") -> float:
    """Riemann-Liouville derivative ``1/Gamma(1-alpha) d/dt int_a^t f(v)(t-v)^-alpha dv``.

    ``scheme="product"`` integrates with product trapezoid weights and
    differentiates by a central difference whose step is the panel width.
    ``scheme="gl"`` uses the first-order Grunwald-Letnikov sum instead, as an
    unrelated discretisation to cross-check against.
    """
    q = q or QuadratureConfig()
    alpha = _check_order(p)
    if alpha == 1.0:
        return evaluate(derivative(f), p.t).unwrap()
    if scheme == "gl":
        return _grunwald_letnikov(f, p, q.panels, alpha)
    if scheme != "product":
        raise ValueError(f"unknown scheme {scheme!r}")
    step = (p.t - p.a) / q.panels
    upper = _fractional_integral(f, p.a, p.t + step, alpha, q.panels)
    lower = _fractional_integral(f, p.a, p.t - step, alpha, q.panels)
    value = (upper - lower) / (2.0 * step) * rgamma(1.0 - alpha)
    if not math.isfinite(value):
        raise ConvergenceError("Riemann-Liouville estimate is not finite")
    return value


def caputo_fod(f: Expr, p: ClassicalParams, q: QuadratureConfig | None = None) -> float:
    """Caputo derivative ``1/Gamma(1-alpha) int_a^t f'(v)(t-v)^-alpha dv``."""
    q = q or QuadratureConfig()
    alpha = _check_order(p)
    df = derivative(f)
    if alpha == 1.0:
        return evaluate(df, p.t).unwrap()
    value = _fractional_integral(df, p.a, p.t, alpha, q.panels) * rgamma(1.0 - alpha)
    if not math.isfinite(value):
        raise ConvergenceError("Caputo estimate is not finite")
    return value


def reference_value(method: str, family: str, p: ClassicalParams, c: float = 1.0) -> float:
    """Analytic value of a classical operator on ``f = c`` or ``f = x``.

    For Euler the evaluation point is ``p.t`` and ``p.a`` is ignored.
    """
    alpha = p.alpha.alpha
    t, a = p.t, p.a
    if method == EULER:
        if family == CONSTANT:
            return c * t**-alpha * rgamma(1.0 - alpha)
        if family == IDENTITY:
            return euler_fod(1.0, alpha, t)
    elif method in (RL, CAPUTO) and 0.0 < alpha < 1.0:
        s = t - a
        if method == RL and family == CONSTANT:
            return c * s**-alpha * rgamma(1.0 - alpha)
        if method == RL and family == IDENTITY:
            return (t * s**-alpha + alpha / (1.0 - alpha) * s ** (1.0 - alpha)) * rgamma(1.0 - alpha)
        if method == CAPUTO and family == CONSTANT:
            return 0.0
        if method == CAPUTO and family == IDENTITY:
            return s ** (1.0 - alpha) * rgamma(2.0 - alpha)
    raise ValueError(f"no reference for method={method!r}, family={family!r}, alpha={alpha}")


def power_rule_reference(k: float, alpha, t: float) -> float:
    """RL (= Caputo for k > 0) derivative of ``x**k`` with lower limit 0."""
    return euler_fod(k, alpha, t)


def convergence_study(compute, exact: float, levels) -> list[tuple[int, float]]:
    """(panels, |error|) pairs for ``compute(QuadratureConfig(panels))``."""
    out = []
    for panels in levels:
        value = compute(QuadratureConfig(panels=panels))
        out.append((panels, abs(value - exact)))
    return out


def observed_orders(errors: list[tuple[int, float]]) -> list[float]:
    """log2 error ratios between successive panel doublings."""
    orders = []
    for (_, e0), (_, e1) in zip(errors, errors[1:]):
        orders.append(math.log2(e0 / e1) if e1 > 0 and e0 > 0 else math.inf)
    return orders


def as_monomial(f: Expr) -> tuple[float, float] | None:
    """``(c, m)`` when f is literally ``c * x**m``, else None."""
    if isinstance(f, Const):
        return f.value, 0.0
    if isinstance(f, Var):
        return 1.0, 1.0
    if isinstance(f, Pow) and isinstance(f.base, Var) and isinstance(f.exponent, Const):
        return 1.0, f.exponent.value
    if isinstance(f, Neg):
        inner = as_monomial(f.arg)
        return None if inner is None else (-inner[0], inner[1])
    if isinstance(f, Mul):
        left, right = as_monomial(f.left), as_monomial(f.right)
        if left is not None and right is not None:
            return left[0] * right[0], left[1] + right[1]
    if isinstance(f, Div) and isinstance(f.right, Const) and f.right.value != 0.0:
        inner = as_monomial(f.left)
        return None if inner is None else (inner[0] / f.right.value, inner[1])
    return None
