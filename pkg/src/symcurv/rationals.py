"""Exact rational scalars: the only number type allowed in this package.

Scalars are plain ints or ``fractions.Fraction``; a Fraction with
denominator 1 is collapsed to int so equal values have equal
representations. Floats are rejected everywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def as_rational(value) -> Rational:
    """Normalize to the canonical scalar form (int when integral)."""
    if isinstance(value, bool):
        raise TypeError("bool is not a valid coefficient")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Rational:
    """Parse 'num/den' or an integer string into an exact scalar."""
    return as_rational(Fraction(text.strip()))


def format_rational(value: Rational) -> str:
    """Inverse of parse_rational; '3' or '-5/7' style."""
    return str(as_rational(value))
