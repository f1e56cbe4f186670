"""Exact rational values.

All distances in this package are :class:`fractions.Fraction` instances; there
is no floating point anywhere.  This module owns the textual boundary: parsing
``"p/q"``, integer, and finite decimal strings, and formatting back to the
canonical reduced form (``"3/4"``, ``"2"``, ``"0"``).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputFormat

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, an integer string, or a finite decimal string, exactly."""
    if not isinstance(text, str):
        raise InputFormat(f"expected a rational string, got {type(text).__name__}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormat(f"not a rational: {text!r}", value=text) from exc


def format_rational(value: Fraction) -> str:
    """Canonical reduced form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    """Coerce an int, string, or Fraction to an exact Fraction.

    Floats (and bools) are rejected: accepting them would silently smuggle
    rounding into a library whose equality tests must be exact.
    """
    if isinstance(value, bool):
        raise InputFormat("bool is not a rational value")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise InputFormat(
            f"floating point value {value!r} rejected: pass an exact string like '3/4' or '0.75'"
        )
    raise InputFormat(f"cannot interpret {type(value).__name__} as a rational")


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list such as ``"0,1/4,1/2,1"``."""
    items = [part.strip() for part in text.split(",")]
    if items == [""]:
        raise InputFormat("empty rational list")
    return [parse_rational(item) for item in items]
