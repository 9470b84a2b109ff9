"""Helper utility functions."""

import math
import time
from fractions import Fraction
from typing import Union

Rational = Union[Fraction, float]


def format_rational(value: Rational) -> str:
    """
    Render a toughness-like value as text.

    Args:
        value: A Fraction or math.inf

    Returns:
        "inf", an integer string, or "p/q"
    """
    if value == math.inf:
        return "inf"
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Rational:
    """
    Parse "inf", an integer, a decimal or "p/q" into an exact value.

    Args:
        text: Textual rational

    Returns:
        Fraction, or math.inf for "inf"
    """
    text = text.strip().lower()
    if text in ("inf", "infinity"):
        return math.inf
    return Fraction(text)


def get_timestamp() -> float:
    """Get current Unix timestamp."""
    return time.time()


def elapsed_since(start: float) -> float:
    """Seconds elapsed since start, rounded to milliseconds."""
    return round(time.time() - start, 3)
