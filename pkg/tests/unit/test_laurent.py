"""Unit tests for Laurent polynomials and the cubic number field."""
from fractions import Fraction

import pytest

from knotgroups.errors import NotDivisibleError, ParseError
from knotgroups.laurent.numberfield import NumberFieldElement, minimal_polynomial_is_irreducible
from knotgroups.laurent.poly import LaurentPoly, laurent_ring, parse_laurent

VARS = ('x', 'y')


@pytest.fixture
def ring():
    return laurent_ring(VARS)


def test_arithmetic_and_printing(ring):
    x, y = ring
    p = (1 + y) * 2
    assert str(p) == "2+2*y"
    assert str(x ** -1 - x) == "x^-1-x"
    assert (x * x ** -1) == 1
    assert (x + y) - (x + y) == 0


def test_negative_power_of_non_unit(ring):
    x, _ = ring
    with pytest.raises(NotDivisibleError):
        (1 + x) ** -1


def test_divide_one_minus(ring):
    x, _ = ring
    assert (1 - x ** 3).divide_one_minus('x') == 1 + x + x ** 2
    assert (1 - x ** -2).divide_one_minus('x') == -(x ** -1) - x ** -2
    with pytest.raises(NotDivisibleError):
        (1 + x).divide_one_minus('x')


def test_exact_divide(ring):
    x, y = ring
    assert (x ** 2 - 1).exact_divide(x - 1) == x + 1
    assert (x ** -1 * (y - x)).exact_divide(y - x) == x ** -1
    with pytest.raises(NotDivisibleError):
        (x ** 2 + 1).exact_divide(x - 1)
    with pytest.raises(ZeroDivisionError):
        x.exact_divide(LaurentPoly.zero(VARS))


def test_normalized_and_units(ring):
    x, y = ring
    p = -2 * x ** -1 * (1 + y)
    assert p.normalized() == 2 + 2 * y
    assert p.format_factored() == "2*(1+y)"
    assert p.equal_up_to_unit(x ** 5 * (1 + y) * 2)
    assert not p.equal_up_to_unit(1 + y)


def test_augment_and_evaluate(ring):
    x, y = ring
    p = (1 - x ** -1) * (y - x)
    assert p.augment() == 0
    assert (x + y).evaluate({'x': 2, 'y': 3}) == 5
    assert (x ** -1).evaluate({'x': Fraction(1, 2), 'y': 0}) == 2


def test_invert_variables(ring):
    x, y = ring
    assert (x * y ** 2 + 1).invert_variables() == x ** -1 * y ** -2 + 1


def test_parse_laurent(ring):
    x, y = ring
    assert parse_laurent("2*(1+y)", VARS) == 2 + 2 * y
    assert parse_laurent("(1 - x^-2)*(y - x^2)", VARS) == (1 - x ** -2) * (y - x ** 2)
    with pytest.raises(ParseError):
        parse_laurent("z + 1", VARS)
    with pytest.raises(ParseError):
        parse_laurent("1/(1 + x)", VARS)


def test_with_variables(ring):
    x, _ = ring
    wide = (x + 1).with_variables(('w', 'x', 'y'))
    assert wide.variables == ('w', 'x', 'y')
    assert wide.coefficient({'x': 1}) == 1


def test_number_field_relation():
    c = NumberFieldElement.generator()
    assert c * c * c == c * c + c + 1
    assert c ** 3 == NumberFieldElement.from_coefficients(1, 1, 1)
    assert minimal_polynomial_is_irreducible()


def test_number_field_inverse():
    c = NumberFieldElement.generator()
    u = c * c + c
    assert u * u.inverse() == 1
    assert (1 / c) * c == 1
    with pytest.raises(ZeroDivisionError):
        NumberFieldElement(0).inverse()


def test_number_field_printing():
    c = NumberFieldElement.generator()
    assert str(c ** 3) == "1+c+c^2"
    assert str(NumberFieldElement(0)) == "0"
