"""Exact rational helpers. ``math.inf`` is the only non-Fraction value allowed."""

import math
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, float]

INFINITY = math.inf


def as_rational(value: Union[int, str, Fraction, float]) -> Rational:
    """Coerce ints, strings and Fractions; floats other than inf are refused."""
    if isinstance(value, float):
        if value == INFINITY:
            return INFINITY
        raise TypeError("floats are not allowed in decision paths; pass a Fraction or a string")
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity"):
        return INFINITY
    return Fraction(value)


def is_infinite(value: Rational) -> bool:
    return value == INFINITY


def ceil_rational(value: Rational) -> int:
    if is_infinite(value):
        raise ValueError("ceiling of INFINITY")
    return math.ceil(Fraction(value))


def floor_rational(value: Rational) -> int:
    if is_infinite(value):
        raise ValueError("floor of INFINITY")
    return math.floor(Fraction(value))
