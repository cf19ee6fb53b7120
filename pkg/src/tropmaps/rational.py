"""Exact rationals for the JSON interchange format.

All numeric data in this package is either a python int or a
fractions.Fraction; floats appear only as the +/- infinity sentinels
used at evaluation boundaries.
"""

import math
from fractions import Fraction

POS_INF = math.inf
NEG_INF = -math.inf


def is_infinite(x):
    return isinstance(x, float) and math.isinf(x)


def parse_rational(value):
    """Parse a JSON scalar ("p/q", decimal-integer string, or int) to a Fraction."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError("not a rational: %r" % value) from exc
    raise ValueError("not a rational: %r" % (value,))


def format_rational(x):
    """Lowest-terms string: "p/q", or plain "p" for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_extended(value):
    """Like parse_rational but accepting "inf" / "-inf"."""
    if isinstance(value, str):
        s = value.strip().lower()
        if s in ("inf", "+inf", "infinity", "oo"):
            return POS_INF
        if s in ("-inf", "-infinity", "-oo"):
            return NEG_INF
    return parse_rational(value)


def format_extended(x):
    if is_infinite(x):
        return "inf" if x > 0 else "-inf"
    return format_rational(x)
