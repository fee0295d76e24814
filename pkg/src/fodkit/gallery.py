"""Test-function gallery with smooth sampling domains.

Each domain avoids x = 0, zeros of f (a zero base with alpha < 1 is a
pole) and poles of f or f'.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .expr import Expr, parse


@dataclass(frozen=True)
class GalleryFunction:
    name: str
    source: str
    lo: float
    hi: float

    @property
    def expr(self) -> Expr:
        return parse(self.source)

    def grid(self, count: int = 50) -> np.ndarray:
        return np.linspace(self.lo, self.hi, count)


GALLERY = (
    GalleryFunction("x^2", "x^2", 0.5, 5.0),
    GalleryFunction("x^3", "x^3", 0.5, 5.0),
    GalleryFunction("x^4", "x^4", 0.5, 5.0),
    GalleryFunction("e^x", "e^x", 0.1, 5.0),
    GalleryFunction("2^x", "2^x", 0.1, 5.0),
    GalleryFunction("sin", "sin(x)", 0.2, 3.0),
    GalleryFunction("cos", "cos(x)", 0.1, 1.4),
    GalleryFunction("tan", "tan(x)", 0.1, 1.4),
    GalleryFunction("cot", "cot(x)", 0.1, 1.4),
    GalleryFunction("ln", "ln(x)", 1.2, 10.0),
    GalleryFunction("quadratic", "x^2+3*x+4", 0.5, 10.0),
    GalleryFunction("quartic", "x^4-5*x^3+x-2", 0.5, 4.5),
    GalleryFunction("1/quadratic", "1/(x^2+3*x+4)", 0.5, 10.0),
    GalleryFunction("1/quartic", "1/(x^4-5*x^3+x-2)", 0.5, 4.5),
    GalleryFunction("1/x^2", "1/x^2", 0.5, 5.0),
    GalleryFunction("sec", "sec(x)", 0.1, 1.4),
    GalleryFunction("csc", "csc(x)", 0.2, 3.0),
)


def by_name(name: str) -> GalleryFunction:
    for g in GALLERY:
        if g.name == name:
            return g
    raise KeyError(name)
