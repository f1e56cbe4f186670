from fractions import Fraction

import pytest

from ultrametric.errors import InputFormat
from ultrametric.rationals import (
    as_rational,
    format_rational,
    parse_rational,
    parse_rational_list,
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/4", Fraction(3, 4)),
        ("0", Fraction(0)),
        ("2", Fraction(2)),
        ("0.75", Fraction(3, 4)),
        ("6/8", Fraction(3, 4)),
        ("0.125", Fraction(1, 8)),
    ],
)
def test_parse(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "x", "1/0", "3//4", "1.2.3"])
def test_parse_rejects(text):
    with pytest.raises(InputFormat):
        parse_rational(text)


def test_format_is_reduced_and_canonical():
    assert format_rational(Fraction(6, 8)) == "3/4"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(4, 2)) == "2"


def test_parse_format_roundtrip():
    for text in ["0", "1/2", "3/4", "17/5", "2"]:
        assert format_rational(parse_rational(text)) == text


def test_as_rational_rejects_inexact_types():
    assert as_rational(2) == Fraction(2)
    assert as_rational(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(InputFormat):
        as_rational(0.75)
    with pytest.raises(InputFormat):
        as_rational(True)


def test_parse_rational_list():
    assert parse_rational_list("0,1/4, 1/2 ,1") == [
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 2),
        Fraction(1),
    ]
    with pytest.raises(InputFormat):
        parse_rational_list("")
