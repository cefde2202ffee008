"""
Exact symbolic substrate: rationals, sparse polynomials, polynomial maps.
"""
from service.symbolic.polynomial import (
    DEFAULT_EXPONENT_CAP,
    ArithOp,
    PolyMap,
    Polynomial,
    VariableSet,
    binomial,
    poly_arith,
    render_polynomial,
    render_terms,
    substitute,
)
from service.symbolic.rational import (
    Rational,
    ceil_rational,
    floor_rational,
    format_rational,
    parse_rational,
    to_rational,
)

__all__ = [
    'DEFAULT_EXPONENT_CAP',
    'ArithOp',
    'PolyMap',
    'Polynomial',
    'VariableSet',
    'binomial',
    'poly_arith',
    'render_polynomial',
    'render_terms',
    'substitute',
    'Rational',
    'ceil_rational',
    'floor_rational',
    'format_rational',
    'parse_rational',
    'to_rational',
]
