"""Gamma function by the Lanczos approximation with reflection."""

from __future__ import annotations

import math

from .errors import PoleError

# Lanczos coefficients for g = 7, n = 9 (Godfrey).
LANCZOS_G = 7.0
LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _lanczos(z: float) -> float:
    # Gamma(z) for z >= 0.5
    z -= 1.0
    acc = LANCZOS_COEFFS[0]
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + LANCZOS_G + 0.5
    # split the power so large z overflows only when Gamma itself does
    half = t ** ((z + 0.5) / 2.0)
    return _SQRT_TWO_PI * half * (half * math.exp(-t)) * acc


def gamma_fn(z: float) -> float:
    """Gamma(z) for real z; raises PoleError at 0, -1, -2, ...

    Positive integers return the exact factorial.  Below 0.5 the reflection
    formula ``Gamma(z) Gamma(1-z) = pi / sin(pi z)`` is used.
    """
    z = float(z)
    if z.is_integer():
        if z <= 0.0:
            raise PoleError(f"gamma has a pole at {z:g}")
        if z <= 171.0:
            return float(math.factorial(int(z) - 1))
    if z < 0.5:
        return math.pi / (math.sin(math.pi * z) * _lanczos(1.0 - z))
    return _lanczos(z)


def rgamma(z: float) -> float:
    """1/Gamma(z), zero at the poles of Gamma."""
    z = float(z)
    if z <= 0.0 and z.is_integer():
        return 0.0
    return 1.0 / gamma_fn(z)
