import random

import pytest

from sdcm import DivisionByZeroSeries, IntPolynomial, LaurentSeries, ParseError
from sdcm.parse import (Add, Div, Lit, Mul, Neg, Pow, Sub, Var, eval_expr,
                        parse, parse_series, render)


def test_parse_structures():
    assert parse("1/(1-2*t)") == Div(Lit(1), Sub(Lit(1), Mul(Lit(2), Var())))
    assert parse("t^2*(1+3*t)") == Mul(Pow(Var(), 2), Add(Lit(1), Mul(Lit(3), Var())))
    assert parse("-t^2") == Neg(Pow(Var(), 2))


def test_parse_is_deterministic():
    assert parse(" 1 + 2*t ") == parse("1+2*t")


def test_implicit_multiplication_rejected_with_offset():
    with pytest.raises(ParseError) as err:
        parse("1/(1-2t)")
    assert err.value.offset == 6
    with pytest.raises(ParseError):
        parse("2 t")


def test_unknown_characters_rejected():
    with pytest.raises(ParseError) as err:
        parse("1+x")
    assert err.value.offset == 2
    with pytest.raises(ParseError):
        parse("sin(3)")


def test_negative_exponent_only_on_t():
    assert eval_expr(parse("t^-2")) == LaurentSeries.monomial(-2)
    with pytest.raises(ParseError):
        parse("2^-1")
    with pytest.raises(ParseError):
        parse("(1+t)^-1")


def test_exponent_must_be_integer_literal():
    with pytest.raises(ParseError):
        parse("t^(2)")
    with pytest.raises(ParseError):
        parse("t^t")


def test_precedence():
    # power binds tighter than unary minus, which binds tighter than *
    assert parse_series("-2^2") == LaurentSeries.from_int(-4)
    assert parse_series("2+3*4") == LaurentSeries.from_int(14)
    assert parse_series("-2*3") == LaurentSeries.from_int(-6)
    assert parse_series("2-3-4") == LaurentSeries.from_int(-5)
    assert parse_series("24/2/3") == LaurentSeries.from_int(4)


def test_eval_examples():
    s = parse_series("1/(1-2*t)")
    assert (s.shift, s.num, s.den) == (0, IntPolynomial([1]), IntPolynomial([1, -2]))
    s = parse_series("(1+t)/t^2")
    assert (s.shift, s.num, s.den) == (-2, IntPolynomial([1, 1]), IntPolynomial([1]))
    assert parse_series("(1-4*t^2)/(1-2*t)") == parse_series("1+2*t")
    with pytest.raises(DivisionByZeroSeries):
        parse_series("1/(t-t)")


def test_render_examples():
    assert render(parse_series("1/(1-2*t)")) == "1/(1-2*t)"
    assert render(parse_series("1+2*t")) == "1+2*t"
    assert render(LaurentSeries.monomial(-1) / parse_series("1-t")) == "t^-1*1/(1-t)"
    assert render(LaurentSeries.from_int(0)) == "0"
    assert render(LaurentSeries.from_int(-3)) == "-3"


def _random_series(rng):
    num = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 5))])
    den = IntPolynomial([1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))])
    if den.is_zero:
        den = IntPolynomial.ONE
    return LaurentSeries(rng.randint(-4, 4), num, den)


def test_render_round_trips():
    rng = random.Random(99)
    for _ in range(300):
        s = _random_series(rng)
        assert parse_series(render(s)) == s, render(s)
