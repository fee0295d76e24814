"""Derivative orders and the branch rules for real powers of negative bases."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError, PoleError


@dataclass(frozen=True)
class FractionalOrder:
    """Order of a derivative: exact rational beta/delta, or a plain real.

    Rational orders are kept in lowest terms with ``delta > 0``.  The
    distinction matters only for negative bases: an odd ``delta`` selects the
    real root, anything else the principal complex value.
    """

    real: float | None = None
    ratio: Fraction | None = None

    def __post_init__(self):
        if (self.real is None) == (self.ratio is None):
            raise ValueError("give exactly one of real or ratio")
        if self.ratio is not None:
            object.__setattr__(self, "ratio", Fraction(self.ratio))
        elif not math.isfinite(self.real):
            raise ValueError("order must be finite")
        else:
            object.__setattr__(self, "real", float(self.real))

    @classmethod
    def rational(cls, beta: int, delta: int = 1) -> FractionalOrder:
        if delta == 0:
            raise ZeroDivisionError("delta must be nonzero")
        return cls(ratio=Fraction(int(beta), int(delta)))

    @classmethod
    def of(cls, value) -> FractionalOrder:
        """Coerce an int, Fraction, float, text or FractionalOrder."""
        if isinstance(value, FractionalOrder):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(ratio=Fraction(value))
        if isinstance(value, float):
            return cls(real=value)
        if isinstance(value, str):
            return parse_order(value)
        raise TypeError(f"cannot interpret {value!r} as an order")

    @property
    def is_rational(self) -> bool:
        return self.ratio is not None

    @property
    def beta(self) -> int | None:
        return self.ratio.numerator if self.ratio is not None else None

    @property
    def delta(self) -> int | None:
        return self.ratio.denominator if self.ratio is not None else None

    @property
    def alpha(self) -> float:
        return float(self.ratio) if self.ratio is not None else self.real

    def is_one(self) -> bool:
        return self.ratio == 1 if self.ratio is not None else self.real == 1.0

    def minus_one(self):
        """alpha - 1, exact for rationals."""
        return self.ratio - 1 if self.ratio is not None else self.real - 1.0

    def __float__(self):
        return self.alpha

    def __str__(self):
        if self.ratio is not None:
            return str(self.ratio)
        return repr(self.real)


def parse_order(text: str) -> FractionalOrder:
    """``"2/3"`` and ``"-2"`` give rational orders; ``"0.5"`` gives a real one."""
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return FractionalOrder.rational(int(num), int(den))
        if s.lstrip("+-").isdigit():
            return FractionalOrder.rational(int(s))
        return FractionalOrder(real=float(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid order {text!r}: {exc}") from None


@dataclass(frozen=True)
class CValue:
    """Complex result ``re + i*im`` of a fractional derivative."""

    re: float
    im: float = 0.0

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0.0

    def __abs__(self):
        return abs(self.value)

    def __str__(self):
        return format_cvalue(self)


def format_cvalue(v: CValue, digits: int = 12) -> str:
    re_text = f"{v.re:#.{digits}g}"
    if v.im == 0.0:
        return f"{re_text} + 0i"
    sign = "-" if v.im < 0 else "+"
    return f"{re_text} {sign} {abs(v.im):#.{digits}g}i"


def branch_power(base: float, exponent) -> complex:
    """``base ** exponent`` under the fractional-derivative branch rules.

    ``exponent`` is a Fraction (rational order) or a float.  Positive bases
    use the ordinary real power.  A negative base with a Fraction exponent
    of odd denominator takes the real root; any other negative-base case
    takes the principal value ``|base|**s * exp(i*pi*s)``.  Integer-valued
    exponents are always real.
    """
    if base == 0.0:
        if exponent > 0:
            return complex(0.0, 0.0)
        if exponent == 0:
            return complex(1.0, 0.0)
        raise PoleError("zero base with negative exponent")
    s = float(exponent)
    if base > 0.0:
        return complex(base**s, 0.0)
    magnitude = (-base) ** s
    if isinstance(exponent, Fraction):
        if exponent.denominator % 2 == 1:
            # real root: sign follows the parity of the numerator
            return complex(-magnitude if exponent.numerator % 2 else magnitude, 0.0)
    elif s.is_integer():
        return complex(-magnitude if int(s) % 2 else magnitude, 0.0)
    return magnitude * _unit_phase(s)


def _unit_phase(s: float) -> complex:
    # exp(i*pi*s), exact at multiples of a quarter turn
    turn = math.fmod(s, 2.0)
    if (2.0 * turn).is_integer():
        return (1.0, 1j, -1.0, -1j)[int(2.0 * turn) % 4]
    return cmath.exp(1j * math.pi * turn)
