from fractions import Fraction
from random import Random

import pytest

from service.exceptions import ExponentOverflowError, ParseError, UsageError
from service.symbolic import (
    ArithOp,
    PolyMap,
    Polynomial,
    VariableSet,
    binomial,
    ceil_rational,
    floor_rational,
    format_rational,
    parse_rational,
    poly_arith,
    render_polynomial,
    substitute,
)

XY = VariableSet(("x", "y"))


def var(name, V=XY):
    return Polynomial.variable(name, V)


def random_polynomial(rng: Random, V=XY, terms=4, degree=3):
    data = {}
    for _ in range(terms):
        monom = tuple(rng.randint(0, degree) for _ in V.names)
        data[monom] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return Polynomial(V, data)


def test_difference_of_squares():
    x, y = var("x"), var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert render_polynomial((x + y) * (x - y)) == "x^2 - y^2"


def test_adding_zero_is_identity():
    p = var("x") * 3 + 1
    assert p + 0 == p
    assert poly_arith(p, Polynomial.zero(XY), ArithOp.ADD) == p


def test_rational_coefficient_product():
    x = var("x")
    product = x.scale(Fraction(1, 2)) * x.scale(Fraction(2, 3))
    assert product == x ** 2 * Fraction(1, 3)
    assert render_polynomial(product) == "1/3·x^2"


def test_mismatched_variable_sets_raise_usage_error():
    other = VariableSet(("x", "z"))
    with pytest.raises(UsageError):
        var("x") + var("x", other)
    with pytest.raises(UsageError):
        poly_arith(var("x"), var("x", other), "mul")


def test_substitute_binomial_expansion():
    x, y = var("x"), var("y")
    assert substitute(x ** 2, {"x": y + 1}) == y ** 2 + y * 2 + 1


def test_substitute_with_no_bindings_is_identity():
    p = var("x") * var("y") + 5
    assert p.substitute({}) == p


def test_substitution_is_simultaneous():
    x, y = var("x"), var("y")
    assert (x - y).substitute({"x": y, "y": x}) == y - x


def test_substitution_is_a_ring_homomorphism():
    rng = Random(20240611)
    x, y = var("x"), var("y")
    for _ in range(25):
        p, q = random_polynomial(rng), random_polynomial(rng)
        bindings = {"x": x * y + 1, "y": y - 2}
        assert (p * q).substitute(bindings) == p.substitute(bindings) * q.substitute(bindings)
        assert (p + q).substitute(bindings) == p.substitute(bindings) + q.substitute(bindings)


def test_equality_is_canonical():
    rng = Random(7)
    for _ in range(25):
        p, q = random_polynomial(rng), random_polynomial(rng)
        rebuilt = Polynomial(XY, dict(p.terms()))
        assert (p - rebuilt).is_zero
        assert ((p - q).is_zero) == (p.terms() == q.terms())


def test_zero_coefficients_are_dropped():
    p = Polynomial(XY, {(1, 0): 1, (0, 1): 0})
    assert p.terms() == {(1, 0): Fraction(1)}
    assert Polynomial(XY, {(2, 0): 0}).is_zero


def test_rendering_is_graded_lex():
    x, y = var("x"), var("y")
    p = y + x ** 2 + x * y * Fraction(-1, 2) + 3
    assert render_polynomial(p) == "x^2 - 1/2·x·y + y + 3"
    assert str(Polynomial.zero(XY)) == "0"
    assert render_polynomial(-x) == "-x"


def test_exponent_cap_is_enforced():
    capped = VariableSet(("x", "y"), exponent_cap=4)
    x = Polynomial.variable("x", capped)
    assert (x ** 4).degree("x") == 4
    with pytest.raises(ExponentOverflowError):
        x ** 5
    with pytest.raises(ExponentOverflowError):
        (x ** 3) * (x ** 2)
    with pytest.raises(ExponentOverflowError):
        Polynomial(capped, {(5, 0): 1})


def test_coefficient_and_degree():
    x, y = var("x"), var("y")
    p = x * y ** 2 * 3 + y ** 2 + x
    assert p.coefficient("y", 2) == x * 3 + 1
    assert p.degree("y") == 2
    assert Polynomial.zero(XY).degree("x") == -1
    assert p.total_degree() == 3
    assert Polynomial.zero(XY).total_degree() == -1


def test_weighted_homogeneity():
    x, y = var("x"), var("y")
    assert (x ** 3 + y ** 2).is_weighted_homogeneous({"x": 2, "y": 3}, 6)
    assert not (x ** 3 + y).is_weighted_homogeneous({"x": 2, "y": 3})


def test_poly_map_difference():
    x, y = var("x"), var("y")
    first = PolyMap(x + y, y)
    assert (first - PolyMap(x, y)) == PolyMap(y, Polynomial.zero(XY))
    assert (first - first).is_zero
    assert str(PolyMap(x, y + 1)) == "(x, y + 1)"


@pytest.mark.parametrize(
    "n, k, expected",
    [(2, 1, 2), (5, 5, 1), (5, 2, 10), (3, 4, 0)],
)
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_rationals_are_reduced_and_formatted():
    value = parse_rational("-6/4")
    assert value == Fraction(-3, 2)
    assert (value.numerator, value.denominator) == (-3, 2)
    assert format_rational(value) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational("−5") == -5


@pytest.mark.parametrize("text", ["", "1/0", "a", "1.5", "2/3/4"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_floor_and_ceil():
    assert floor_rational(Fraction(-3, 2)) == -2
    assert ceil_rational(Fraction(-3, 2)) == -1
    assert floor_rational(Fraction(4, 2)) == ceil_rational(Fraction(4, 2)) == 2
