from fractions import Fraction

import pytest
from hypothesis import given, settings

from gorenstein.parsing import ParseError, PolynomialSource, parse_polynomial, parse_rational
from gorenstein.poly import Polynomial
from gorenstein.worked_examples import a_generators, a_reference_R, cubic, cubic_reference_form

from strategies import polynomials


def test_cubic_with_parameter():
    p = parse_polynomial("z1^3 + z2^3 + z3^3 + t*z1*z2*z3", parameters={"t": 1})
    assert p == cubic(1)
    assert p.variables == ("z1", "z2", "z3")


def test_zero():
    p = parse_polynomial("0", variables=["x1"])
    assert p.is_zero()


def test_literal_generator():
    p = parse_polynomial("2*x1^3 + 3*x1*x2^3")
    assert p == a_generators(3)[0]
    assert p.terms == {(3, 0): 2, (1, 3): 3}


def test_rational_literals_and_precedence():
    p = parse_polynomial("-1/48*y1^2*y2^4 + (y1 - y2)^2 / 2", ["y1", "y2"])
    y1, y2 = Polynomial.gens(("y1", "y2"))
    assert p == Fraction(-1, 48) * y1**2 * y2**4 + Fraction(1, 2) * (y1 - y2) ** 2
    assert parse_polynomial("-x1^2", ["x1"]) == -(Polynomial.gens(("x1",))[0] ** 2)


def test_natural_variable_order():
    p = parse_polynomial("z10 + z2 + z1")
    assert p.variables == ("z1", "z2", "z10")


def test_source_object():
    src = PolynomialSource("t*x1 + x2", ("x1", "x2"), {"t": Fraction(3, 2)})
    x1, x2 = Polynomial.gens(("x1", "x2"))
    assert parse_polynomial(src) == Fraction(3, 2) * x1 + x2


@pytest.mark.parametrize(
    "text, message",
    [
        ("z1^3 +", "unexpected end"),
        ("z1 z2", "unexpected"),
        ("z1^-1", "exponent"),
        ("1/0", "zero denominator"),
        ("x1 / x2", "non-constant"),
        ("z1 $ z2", "unexpected character"),
        ("", "empty"),
        ("(z1 + z2", r"expected '\)'"),
    ],
)
def test_syntax_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_polynomial(text, ["z1", "z2", "x1", "x2"])


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("z1 + * z2", ["z1", "z2"])
    assert info.value.position == 5


def test_unknown_identifier():
    with pytest.raises(ParseError, match="unknown identifier 'w'"):
        parse_polynomial("z1 + w", ["z1"])


def test_parameter_clash():
    with pytest.raises(ValueError):
        parse_polynomial("t*z1", ["t", "z1"], {"t": 1})


def test_parse_rational():
    assert parse_rational(" -7/21 ") == Fraction(-1, 3)
    with pytest.raises(ValueError):
        parse_rational("1/0")


@pytest.mark.parametrize(
    "poly",
    [cubic(5), cubic(Fraction(-7, 3)), a_reference_R(3), cubic_reference_form(4)] + a_generators(1),
    ids=str,
)
def test_round_trip_fixtures(poly):
    assert parse_polynomial(str(poly), poly.variables) == poly


@settings(max_examples=100, deadline=None)
@given(polynomials(("x1", "x2", "x3"), max_exp=4))
def test_round_trip_random(p):
    assert parse_polynomial(str(p), p.variables) == p
