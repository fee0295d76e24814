"""Recursive-descent parser for single-variable expressions.

Grammar::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | 'x' | 'e' | 'pi' | FUNC '(' expr ')' | '(' expr ')'

``^`` is right-associative and binds tighter than unary minus, so ``-x^2``
is ``-(x^2)`` and ``2^-x`` is ``2^(-x)``.  A numeric literal raised to an
x-dependent exponent becomes a :class:`PowBase` node, and ``e^u`` becomes
``exp(u)``.
"""

from __future__ import annotations

import math
import re

from ..errors import ParseError
from .nodes import FUNCTIONS, Add, Const, Div, Expr, Func, Mul, Neg, Pow, PowBase, Sub, Var

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)

_CONSTANTS = {"e": math.e, "pi": math.pi}


def _tokenize(source):
    tokens = []
    pos = 0
    n = len(source)
    while pos < n:
        if source[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(source, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, source):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, text, pos = self.advance()
        if text != value or kind not in ("op",):
            found = "end of input" if kind == "end" else repr(text)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def parse(self):
        tree = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {text!r}", pos)
        return tree

    def expr(self):
        left = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.advance()[1]
            right = self.term()
            left = Add(left, right) if op == "+" else Sub(left, right)
        return left

    def term(self):
        left = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.advance()[1]
            right = self.unary()
            left = Mul(left, right) if op == "*" else Div(left, right)
        return left

    def unary(self):
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return Neg(self.unary())
        if kind == "op" and text == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        literal = self.peek()
        base = self.atom()
        kind, text, _ = self.peek()
        if not (kind == "op" and text == "^"):
            return base
        self.advance()
        exponent = self.unary()
        if literal[0] == "name" and literal[1] == "e":
            return Func("exp", exponent)
        if literal[0] == "num" and exponent.contains_x():
            value = base.value
            if value > 0.0 and value != 1.0:
                return PowBase(value, exponent)
        return Pow(base, exponent)

    def atom(self):
        kind, text, pos = self.advance()
        if kind == "num":
            return Const(float(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Func(text, arg)
            if text in _CONSTANTS:
                return Const(_CONSTANTS[text])
            raise ParseError(f"unknown identifier {text!r}", pos)
        if kind == "op" and text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(text)
        raise ParseError(f"unexpected {found}", pos)


def parse(source: str) -> Expr:
    """Parse ``source`` into an :class:`Expr`.

    >>> parse("x^2+3*x+4")
    Add(left=Add(left=Pow(base=Var(), exponent=Const(value=2.0)), right=Mul(left=Const(value=3.0), right=Var())), right=Const(value=4.0))
    """
    if not isinstance(source, str):
        raise TypeError("source must be a string")
    return _Parser(source).parse()
