"""
The local fractional derivative
===============================

Evaluate f'(x) * (f(x)/x)**(alpha - 1) for a few functions and orders.
"""

from fodkit import FractionalOrder, classify, fod_symbolic, fod_value, parse, to_string

# Constants are annihilated and the identity is a fixed point at every order.
for alpha in ("-5/2", "1/2", "5/2"):
    print(alpha, fod_value(parse("7"), alpha, 3.0), fod_value(parse("x"), alpha, 3.0))

# Order 1 is the ordinary derivative.
f = parse("x^2+3*x+4")
print("alpha=1 at x=2:", fod_value(f, 1, 2.0))

# The symbolic form keeps the ratio visible.
for src in ("x^3", "sin(x)", "e^x", "cot(x)"):
    print(src, "->", to_string(fod_symbolic(parse(src), "1/2")))

# A negative ratio f(x)/x gives a real value for odd denominators and a
# complex one otherwise.
sin = parse("sin(x)")
for order in (FractionalOrder.rational(1, 3), FractionalOrder.rational(1, 2)):
    print(order, classify(sin, order, 4.0), fod_value(sin, order, 4.0))
