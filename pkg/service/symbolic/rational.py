"""
Exact rational helpers.

Rationals are ``fractions.Fraction`` values: always reduced, denominator
positive, canonical zero ``0/1``. This module adds conversion, parsing and
the textual ``a/b`` form (``/1`` omitted) used in every report.
"""

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from service.exceptions import ParseError, UsageError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def normalize_minus(text: str) -> str:
    """Replace typographic minus signs with ASCII ``-``."""
    return text.replace("−", "-").replace("–", "-")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int or rational number into a reduced ``Fraction``."""
    if isinstance(value, bool):
        raise UsageError(f"boolean is not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(int(value.numerator), int(value.denominator))
    # sympy QQ elements expose numerator/denominator without registering as numbers.Rational
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if numerator is not None and denominator is not None:
        return Fraction(int(numerator), int(denominator))
    raise UsageError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction. Raises ParseError."""
    cleaned = normalize_minus(text.strip())
    match = _RATIONAL_PATTERN.match(cleaned)
    if not match:
        raise ParseError(f"not a rational number: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_rational(value: RationalLike) -> str:
    """Render as ``a/b``, or ``a`` when the denominator is 1."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def floor_rational(value: RationalLike) -> int:
    """Exact floor of a rational."""
    value = to_rational(value)
    return value.numerator // value.denominator


def ceil_rational(value: RationalLike) -> int:
    """Exact ceiling of a rational."""
    value = to_rational(value)
    return -((-value.numerator) // value.denominator)
