from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessberg.errors import RingMismatchError, UndefinedDegreeError
from hessberg.polyring import (
    add,
    constant,
    degree,
    format_poly,
    is_homogeneous,
    linear_form,
    mul,
    parse_poly,
    polynomial_ring,
    product,
    shift_variables,
    substitute,
    terms,
    to_qq,
    variables,
)

_monomials = st.tuples(*[st.integers(0, 3)] * 3)
_coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(bool)
polys3 = st.dictionaries(_monomials, _coeffs, max_size=5).map(
    lambda d: polynomial_ring(3).from_dict({m: to_qq(c) for m, c in d.items()})
)


def test_ring_is_cached():
    assert polynomial_ring(4) is polynomial_ring(4)
    with pytest.raises(ValueError):
        polynomial_ring(0)


def test_format_uses_degrevlex_order():
    x1, x2, x3 = variables(3)
    p = x1 ** 2 * x2 - to_qq(Fraction(3, 2)) * x3
    assert format_poly(p) == "x1^2*x2 - 3/2*x3"
    assert format_poly(polynomial_ring(2).zero) == "0"
    assert format_poly(constant(-2, 2)) == "-2"


def test_parse_grammar():
    x1, x2, x3 = variables(3)
    assert parse_poly("x1^2*x2 - 3/2*x3", 3) == x1 ** 2 * x2 - to_qq(Fraction(3, 2)) * x3
    assert parse_poly(" 2 x1 x3 ", 3) == 2 * x1 * x3
    assert parse_poly("-x2^3", 3) == -x2 ** 3


@pytest.mark.parametrize("text", ["x1 +* x2", "x5 + 1", "1/x1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_poly(text, 2)


def test_degree_of_zero_is_undefined():
    with pytest.raises(UndefinedDegreeError):
        degree(polynomial_ring(2).zero)
    x1, x2 = variables(2)
    assert degree(x1 ** 2 * x2 + x1) == 3
    assert not is_homogeneous(x1 ** 2 * x2 + x1)
    assert is_homogeneous(x1 * x2 - x2 ** 2)


def test_mixed_rings_are_rejected():
    with pytest.raises(RingMismatchError):
        add(variables(2)[0], variables(3)[0])
    with pytest.raises(RingMismatchError):
        mul(variables(2)[0], variables(3)[0])


def test_substitute_and_shift():
    x1, x2 = variables(2)
    assert substitute(x1 * x2, 1, x2) == x2 ** 2
    with pytest.raises(IndexError):
        substitute(x1, 3, x2)
    y1, y2, y3 = variables(3)
    assert shift_variables(x1 - x2, 3) == y2 - y3
    assert shift_variables(x1 - x2, 3, offset=0) == y1 - y2
    with pytest.raises(RingMismatchError):
        shift_variables(x1, 2, offset=1)


@pytest.mark.parametrize(
    "text,k,value,expected",
    [
        ("x1 + x4", 1, "-x4", "0"),
        ("x1*(x1 - x3) + x2*(x2 - x3)", 1, "x3", "x2*(x2 - x3)"),
        ("x1^2 - x2^2", 2, "x1", "0"),
    ],
)
def test_substitute_cases(text, k, value, expected):
    n = 4
    assert substitute(parse_poly(text, n), k, parse_poly(value, n)) == parse_poly(expected, n)


def test_linear_form_and_product():
    x1, _, x3 = variables(3)
    assert linear_form([1, 0, -1]) == x1 - x3
    assert linear_form([0, 0], 2) == polynomial_ring(2).zero
    assert product([], 3) == polynomial_ring(3).one
    assert product([x1, x1 - x3], 3) == x1 ** 2 - x1 * x3


def test_terms_are_fractions_in_descending_order():
    x1, x2 = variables(2)
    assert terms(x2 + to_qq(Fraction(1, 2)) * x1 ** 2) == [((2, 0), Fraction(1, 2)), ((0, 1), Fraction(1))]


@settings(max_examples=60, deadline=None)
@given(polys3)
def test_parse_inverts_format(p):
    assert parse_poly(format_poly(p), 3) == p


@settings(max_examples=60, deadline=None)
@given(polys3, polys3, polys3)
def test_ring_laws(p, q, r):
    assert add(p, q) == add(q, p)
    assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
    assert add(add(p, q), r) == add(p, add(q, r))
    assert mul(mul(p, q), r) == mul(p, mul(q, r))
