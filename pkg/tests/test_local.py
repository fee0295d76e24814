import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fodkit import FractionalOrder, classify, fod_limit_oracle, fod_symbolic, fod_value, parse
from fodkit.errors import ConvergenceError, DomainError, ParseError, PoleError
from fodkit.expr import derivative, evaluate, to_string
from fodkit.gallery import GALLERY
from fodkit.local import COMPLEX, REAL, FodPoint, post_lhospital_quotient, raw_quotient, richardson
from fodkit.order import CValue, branch_power, format_cvalue, parse_order

ORDERS = [-2.5, -1, -0.5, 0.5, 1, 1.5, 2.5]


class TestFractionalOrder:
    def test_lowest_terms(self):
        o = FractionalOrder.rational(4, -6)
        assert (o.beta, o.delta) == (-2, 3)

    def test_zero_delta(self):
        with pytest.raises(ZeroDivisionError):
            FractionalOrder.rational(1, 0)

    @pytest.mark.parametrize(
        "text, rational, alpha",
        [("2/3", True, 2 / 3), ("-2", True, -2.0), ("0.5", False, 0.5), (" 5/2 ", True, 2.5)],
    )
    def test_parse(self, text, rational, alpha):
        o = parse_order(text)
        assert o.is_rational == rational
        assert o.alpha == alpha

    @pytest.mark.parametrize("text", ["", "a", "1/0", "1/2/3"])
    def test_parse_error(self, text):
        with pytest.raises(ParseError):
            parse_order(text)

    @given(st.integers(-50, 50), st.integers(1, 50))
    def test_delta_positive(self, beta, delta):
        for d in (delta, -delta):
            o = FractionalOrder.rational(beta, d)
            assert o.delta > 0
            assert o.ratio == Fraction(beta, d)
            assert math.gcd(o.beta, o.delta) == 1


class TestBranchPower:
    def test_positive(self):
        assert branch_power(8.0, Fraction(1, 3)) == pytest.approx(2.0)

    def test_odd_root_of_negative(self):
        assert branch_power(-8.0, Fraction(1, 3)) == pytest.approx(-2.0)
        assert branch_power(-8.0, Fraction(2, 3)) == pytest.approx(4.0)
        assert branch_power(-8.0, Fraction(-1, 3)).imag == 0.0

    def test_even_root_is_principal(self):
        z = branch_power(-4.0, Fraction(1, 2))
        assert z == pytest.approx(2j)

    def test_real_exponent_is_principal(self):
        z = branch_power(-2.0, 1 / 3)
        assert z == pytest.approx(2 ** (1 / 3) * complex(math.cos(math.pi / 3), math.sin(math.pi / 3)))

    def test_quarter_turn_phase_exact(self):
        assert branch_power(-4.0, 0.5) == 2j
        assert branch_power(-4.0, -1.5) == 0.125j

    def test_integer_real_exponent(self):
        assert branch_power(-2.0, 3.0) == -8.0

    def test_zero_base(self):
        assert branch_power(0.0, 0.5) == 0
        with pytest.raises(PoleError):
            branch_power(0.0, -0.5)


class TestFodValue:
    @pytest.mark.parametrize("alpha", ORDERS)
    def test_constant(self, alpha):
        f = parse("5")
        for x in (-2.0, 0.5, 3.0):
            assert fod_value(f, alpha, x) == CValue(0.0, 0.0)

    @pytest.mark.parametrize("alpha", ORDERS)
    def test_identity(self, alpha):
        f = parse("x")
        for x in (-2.0, 0.5, 3.0, 7.0):
            assert fod_value(f, alpha, x) == CValue(1.0, 0.0)

    def test_case3(self):
        # f = a x + b at alpha = 2 gives a (a x + b) / x
        f = parse("2*x+1")
        assert fod_value(f, 2, 1.0).re == pytest.approx(6.0, rel=1e-15)

    def test_case4(self):
        f = parse("2*x+1")
        assert fod_value(f, -2, 1.0).re == pytest.approx(2 / 27, rel=1e-14)

    def test_sin_odd_delta_real(self):
        v = fod_value(parse("sin(x)"), FractionalOrder.rational(1, 3), 4.0)
        assert v.im == 0.0
        ratio = math.sin(4.0) / 4.0
        # real cube root, even numerator: (r^(1/3))^-2 > 0
        assert v.re == pytest.approx(math.cos(4.0) * (-ratio) ** (-2 / 3), rel=1e-14)

    def test_sin_even_delta_complex(self):
        v = fod_value(parse("sin(x)"), FractionalOrder.rational(1, 2), 4.0)
        assert v.im != 0.0
        ratio = math.sin(4.0) / 4.0
        assert v.value == pytest.approx(math.cos(4.0) * complex(ratio) ** -0.5, rel=1e-14)

    def test_x_zero(self):
        with pytest.raises(DomainError):
            fod_value(parse("x^2"), 0.5, 0.0)

    def test_x_zero_at_order_one(self):
        assert fod_value(parse("x^2"), 1, 0.0) == CValue(0.0, 0.0)

    def test_zero_function_value_pole(self):
        with pytest.raises(PoleError):
            fod_value(parse("ln(x)"), 0.5, 1.0)

    def test_zero_function_value_positive_exponent(self):
        assert fod_value(parse("ln(x)"), 1.5, 1.0) == CValue(0.0, 0.0)

    def test_undefined_function(self):
        with pytest.raises(DomainError):
            fod_value(parse("ln(x)"), 0.5, -1.0)

    def test_text_and_float_orders_agree_on_positive_base(self):
        f = parse("x^2+3*x+4")
        assert fod_value(f, "1/2", 2.0).re == pytest.approx(fod_value(f, 0.5, 2.0).re, rel=1e-15)

    def test_quadratic_value(self):
        # f'(2) = 7, f(2)/2 = 7
        assert fod_value(parse("x^2+3*x+4"), 0.5, 2.0).re == pytest.approx(7 / math.sqrt(7), rel=1e-15)

    def test_format(self):
        assert format_cvalue(fod_value(parse("x"), "2/3", 7.0)) == "1.00000000000 + 0i"


@pytest.mark.parametrize("g", GALLERY, ids=lambda g: g.name)
def test_order_one_is_classical(g):
    f = g.expr
    df = derivative(f)
    for x in g.grid():
        v = fod_value(f, 1, x)
        assert v.im == 0.0
        assert v.re == evaluate(df, x).value


class TestSymbolic:
    @pytest.mark.parametrize(
        "src, printed",
        [
            ("x^3", "3*x^2*(x^2)^-0.5"),
            ("sin(x)", "cos(x)*(sin(x)/x)^-0.5"),
            ("e^x", "exp(x)*(exp(x)/x)^-0.5"),
            ("cot(x)", "-((1 + cot(x)^2)*(cot(x)/x)^-0.5)"),
            ("ln(x)", "1/x*(ln(x)/x)^-0.5"),
        ],
    )
    def test_rule_table(self, src, printed):
        assert to_string(fod_symbolic(parse(src), "1/2")) == printed

    @pytest.mark.parametrize("src", ["x^3", "sin(x)", "cos(x)", "tan(x)", "cot(x)", "sec(x)", "csc(x)", "e^x", "2^x", "ln(x)"])
    @pytest.mark.parametrize("alpha", ["1/2", "5/2", "-3/2"])
    def test_symbolic_evaluates_to_value(self, src, alpha):
        f = parse(src)
        s = fod_symbolic(f, alpha)
        for x in (1.1, 1.3):
            assert evaluate(s, x).value == pytest.approx(fod_value(f, alpha, x).re, rel=1e-13)

    def test_power_rule_closed_form(self):
        # n x^(n-1) x^(n(b-d)/d) / x^((b-d)/d) with n = 4, alpha = 2/3
        f, x = parse("x^4"), 1.7
        n, b, d = 4, 2, 3
        expected = n * x ** (n - 1) * x ** (n * (b - d) / d) / x ** ((b - d) / d)
        assert fod_value(f, "2/3", x).re == pytest.approx(expected, rel=1e-14)

    def test_order_one(self):
        assert fod_symbolic(parse("sin(x)"), 1) == derivative(parse("sin(x)"))


class TestOracle:
    def test_identity(self):
        assert fod_limit_oracle(parse("x"), 0.7, 3.0).re == pytest.approx(1.0, abs=1e-12)

    def test_order_one(self):
        assert fod_limit_oracle(parse("x^2"), 1, 5.0).re == pytest.approx(10.0, rel=1e-10)

    def test_quadratic(self):
        f = parse("x^2+3*x+4")
        v = fod_limit_oracle(f, "1/2", 2.0)
        assert abs(v.re - fod_value(f, "1/2", 2.0).re) <= 1e-6 * abs(v.re)

    def test_complex_branch(self):
        f = parse("sin(x)")
        v = fod_limit_oracle(f, "1/2", 4.0)
        assert abs(v.value - fod_value(f, "1/2", 4.0).value) <= 1e-6 * abs(v.value)

    def test_raw_mode(self):
        f = parse("x^2+3*x+4")
        v = fod_limit_oracle(f, "1/2", 2.0, raw=True, tol=1e-7)
        assert v.re == pytest.approx(fod_value(f, "1/2", 2.0).re, rel=1e-6)

    def test_raw_quotient_approaches_value(self):
        f = parse("e^x")
        exact = fod_value(f, 1.5, 1.0).re
        q = raw_quotient(f, 1.5, FodPoint(1.0, 1e-5))
        assert q.real == pytest.approx(exact, rel=1e-4)

    def test_quotient_at_step(self):
        f = parse("x^2")
        q = post_lhospital_quotient(f, 0.5, FodPoint(2.0, 0.5))
        assert q == pytest.approx(5.0 * 2.5**-0.5)

    def test_non_convergence(self):
        with pytest.raises(ConvergenceError):
            fod_limit_oracle(parse("x^2"), 0.5, 2.0, levels=2, tol=1e-16)

    def test_domain_error_at_probe(self):
        # h0 steps across the tan pole at pi/2
        with pytest.raises(PoleError):
            fod_limit_oracle(parse("tan(x)"), 0.5, math.pi / 2 - 0.3, h0=0.3)

    def test_bad_step(self):
        with pytest.raises(ValueError):
            FodPoint(1.0, 0.0)

    def test_richardson_linear(self):
        est, err = richardson([3.0 + 0.1 * 2.0**-k for k in range(6)])
        assert est == pytest.approx(3.0, abs=1e-14)


@pytest.mark.parametrize("g", GALLERY, ids=lambda g: g.name)
def test_oracle_matches_closed_form(g):
    f = g.expr
    for alpha in (0.5, 1.5, 2.5):
        for x in g.grid(10):
            exact = fod_value(f, alpha, x)
            est = fod_limit_oracle(f, alpha, x)
            assert abs(est.value - exact.value) <= 1e-6 * (1 + abs(exact.value))


class TestClassify:
    def test_positive_base(self):
        assert classify(parse("x^2+3*x+4"), "1/2", 1.0) == REAL

    def test_sin_examples(self):
        f = parse("sin(x)")
        assert classify(f, FractionalOrder.rational(1, 3), 4.0) == REAL
        assert classify(f, FractionalOrder.rational(1, 2), 4.0) == COMPLEX

    def test_against_branch_rule(self):
        rng = random.Random(20261016)
        funcs = [g.expr for g in GALLERY] + [parse("x-3"), parse("-x^3"), parse("cos(x)*x")]
        checked = 0
        while checked < 1000:
            f = rng.choice(funcs)
            x = rng.uniform(-6.0, 6.0)
            if rng.random() < 0.7:
                alpha = FractionalOrder.rational(rng.randint(-7, 7), rng.randint(1, 6))
            else:
                alpha = FractionalOrder(real=rng.uniform(-3.0, 3.0))
            try:
                v = fod_value(f, alpha, x)
                fx = evaluate(f, x).unwrap()
                dfx = evaluate(derivative(f), x).unwrap()
            except DomainError:
                continue
            ratio = fx / x
            s = alpha.minus_one()
            expected_real = (
                alpha.is_one()
                or dfx == 0.0
                or ratio >= 0.0
                or (alpha.is_rational and alpha.delta % 2 == 1)
                or float(s).is_integer()
            )
            label = classify(f, alpha, x)
            assert label == (REAL if v.im == 0.0 else COMPLEX)
            assert label == (REAL if expected_real else COMPLEX), (to_string(f), alpha, x)
            checked += 1


SAMPLE_ORDERS = [-2.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.5]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(GALLERY), st.floats(0.0, 1.0))
def test_monotone_in_alpha(g, u):
    f = g.expr
    x = g.lo + u * (g.hi - g.lo)
    fx = evaluate(f, x).value
    ratio = fx / x
    if not ratio > 0.0:
        return
    values = [fod_value(f, a, x).re for a in SAMPLE_ORDERS]
    slope = evaluate(derivative(f), x).value
    diffs = np.diff(values)
    tol = 1e-12 * (1 + np.abs(values[:-1]))
    if slope * math.log(ratio) >= 0.0:
        assert np.all(diffs >= -tol)
    else:
        assert np.all(diffs <= tol)
