"""
Common utility functions.
"""
import re
from datetime import datetime, timezone
from fractions import Fraction
from typing import List, Tuple

from service.exceptions import ParseError
from service.symbolic.rational import normalize_minus, parse_rational

_INTEGER_PATTERN = re.compile(r"^[+-]?\d+$")


def utc_now() -> datetime:
    """
    Return current time in UTC.

    Returns:
        datetime: Current timezone-aware UTC time.
    """
    return datetime.now(timezone.utc)


def format_timestamp(dt: datetime) -> str:
    """
    Format datetime as a UTC string.

    Args:
        dt: datetime object to format (naive values are taken as UTC).

    Returns:
        str: String in "YYYY-MM-DD HH:MM:SS UTC" format.
    """
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc).strftime("%Y-%m-%d %H:%M:%S UTC")


def split_csv(text: str) -> List[str]:
    """
    Split a comma-separated argument, tolerating whitespace and wrapping parentheses.

    Args:
        text: e.g. "3,2,5", " (3, 2, 5) ", "1, -2/3".

    Returns:
        List of stripped items; empty list for an empty string.
    """
    cleaned = normalize_minus(text).strip()
    if cleaned.startswith("(") and cleaned.endswith(")"):
        cleaned = cleaned[1:-1].strip()
    if not cleaned:
        return []
    items = [item.strip() for item in cleaned.split(",")]
    if any(not item for item in items):
        raise ParseError(f"empty entry in {text!r}")
    return items


def parse_integer_list(text: str) -> Tuple[int, ...]:
    """Parse "3,2,5" into (3, 2, 5). Raises ParseError."""
    values = []
    for item in split_csv(text):
        if not _INTEGER_PATTERN.match(item):
            raise ParseError(f"not an integer: {item!r} in {text!r}")
        values.append(int(item))
    return tuple(values)


def parse_rational_list(text: str) -> Tuple[Fraction, ...]:
    """Parse "1,-2/3" into (1, -2/3). Raises ParseError."""
    return tuple(parse_rational(item) for item in split_csv(text))


def parse_fraction_pair(text: str) -> Tuple[int, int]:
    """Parse "p/q" (or "p") into the integer pair (p, q) without reducing."""
    cleaned = normalize_minus(text).strip()
    match = re.match(r"^(\d+)(?:/(\d+))?$", cleaned)
    if not match:
        raise ParseError(f"expected p/q with positive integers, got {text!r}")
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    if p == 0 or q == 0:
        raise ParseError(f"p and q must be positive in {text!r}")
    return p, q
