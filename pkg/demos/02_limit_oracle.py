"""
Checking the closed form against its defining limit
====================================================

The limit oracle samples the L'Hospital quotient at h = h0 * 2**-k and
extrapolates to h = 0.  It should agree with the closed form to many digits.
"""

import numpy as np

from fodkit import fod_limit_oracle, fod_value
from fodkit.gallery import GALLERY

for g in GALLERY:
    worst = 0.0
    for x in g.grid(20):
        exact = fod_value(g.expr, 1.5, x).value
        est = fod_limit_oracle(g.expr, 1.5, x).value
        worst = max(worst, abs(est - exact) / abs(exact))
    print(f"{g.name:12s} worst relative gap {worst:.1e}")

# The raw difference ratio converges too, just less cleanly.
f = GALLERY[10].expr
print(fod_limit_oracle(f, 0.5, 2.0, raw=True, tol=1e-7), fod_value(f, 0.5, 2.0))
print(np.sqrt(7.0))
