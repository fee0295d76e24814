"""
Ordering in alpha
=================

At fixed x with r = f(x)/x > 0, the derivative f'(x) * r**(alpha-1) is
monotone in alpha, increasing exactly when f'(x) * ln(r) > 0.  Points with
r < 1 are reported as skipped.
"""

import numpy as np

from fodkit import monotone_direction, ordering_check, parse
from fodkit.properties import ASCENDING, DESCENDING

alphas = ["-1/2", "1/2", "1", "3/2", "5/2"]
report = ordering_check(parse("x^2+3*x+4"), alphas, np.linspace(0.5, 10, 200), ASCENDING)
print(report.function, report.counts)

report = ordering_check(parse("1/(x^2+3*x+4)"), alphas, np.linspace(0.005, 1, 200), DESCENDING)
print(report.function, report.counts)
print(report.points[-1].reason)

print(monotone_direction(parse("1/(x^2+3*x+4)"), 1.0))
print(report.to_csv()[:200])
