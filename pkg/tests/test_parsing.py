"""Expression grammar: accepted forms and error reporting."""

import pytest

from curvelab.errors import ParseError, UnknownVariableError
from curvelab.parsing import parse_polynomial
from curvelab.rationals import Rat

XYZ = ("x", "y", "z")


def test_rational_coefficients():
    p = parse_polynomial("1/4*x + x/4", XYZ)
    assert p.coeff((1, 0, 0)).as_rational() == Rat(1, 2)


def test_unary_minus_and_parens():
    p = parse_polynomial("-(x - y)^2", XYZ)
    assert p.coeff((2, 0, 0)).as_rational() == -1
    assert p.coeff((1, 1, 0)).as_rational() == 2


def test_power_binds_tighter_than_product():
    p = parse_polynomial("2*x^3", XYZ)
    assert p.coeff((3, 0, 0)).as_rational() == 2


def test_truncated_input():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^2 + ", XYZ)
    assert err.value.position == len("x^2 + ")  # stopped at end of input


def test_unbalanced_paren():
    with pytest.raises(ParseError):
        parse_polynomial("(x + y", XYZ)


def test_garbage_token():
    with pytest.raises(ParseError):
        parse_polynomial("x $ y", XYZ)


def test_unknown_variable():
    with pytest.raises(UnknownVariableError) as err:
        parse_polynomial("x + w", XYZ)
    assert err.value.name == "w"


def test_non_integer_denominator_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x/y", XYZ)


def test_zero_denominator_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("x/0", XYZ)
