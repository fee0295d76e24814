"""
Euler, Riemann-Liouville and Caputo on f = c and f = x
======================================================

The classical operators are nonlocal.  Riemann-Liouville and the Euler power
rule give nonzero values on constants; none of the three returns 1 on the
identity.
"""

import math

from fodkit import ClassicalParams, QuadratureConfig, caputo_fod, euler_fod, parse, reference_value, rl_fod
from fodkit.classical import CAPUTO, CONSTANT, IDENTITY, RL, convergence_study, observed_orders

p = ClassicalParams(a=0.5, t=1.5, alpha="2/3")

print("Euler  c=5:", euler_fod(0, "2/3", 1.5, 5.0))
print("RL     c=5:", rl_fod(parse("5"), p), "exact", reference_value(RL, CONSTANT, p, 5.0))
print("Caputo c=5:", caputo_fod(parse("5"), p))

print("Euler  x:", euler_fod(1, "2/3", 1.5))
print("RL     x:", rl_fod(parse("x"), p), "exact", reference_value(RL, IDENTITY, p))
print("Caputo x:", caputo_fod(parse("x"), p), "exact", reference_value(CAPUTO, IDENTITY, p))

# Product-trapezoid quadrature converges at second order.
levels = (256, 512, 1024, 2048, 4096)
errs = convergence_study(lambda q: rl_fod(parse("x"), p, q), reference_value(RL, IDENTITY, p), levels)
for (n, e), order in zip(errs[1:], observed_orders(errs)):
    print(f"{n:5d} panels  error {e:.2e}  order {order:.2f}")

# Grunwald-Letnikov is an unrelated first-order scheme.
gl = rl_fod(parse("x"), p, QuadratureConfig(panels=65536), scheme="gl")
print("GL:", gl, "gap", abs(gl - reference_value(RL, IDENTITY, p)))
print("8/(3 sqrt(pi)) =", 8 / (3 * math.sqrt(math.pi)), caputo_fod(parse("x^2"), ClassicalParams(0, 1, 0.5)))
