"""
Rationals

`fractions.Fraction` is the rational type throughout Hodge. This module
holds the "p/q" text format used by the JSON and CSV artifacts, and the
few integer combinatorics helpers the formulas need.

"""

import re
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, isqrt

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def to_string(value):
    """
    Serialize a rational as "p/q", or "p" when the denominator is 1.

    Args:
        value (Fraction or int): The value.

    Returns:
        text (str): The canonical string.

    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse(text):
    """
    Parse the "p/q" format written by `to_string`.

    Args:
        text (str): The string.

    Returns:
        value (Fraction): The rational.

    Raises:
        ValueError: If `text` is not of the form "p" or "p/q", or q is zero.

    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError("not a rational: %r" % text)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise ValueError("zero denominator: %r" % text)


def rational_sqrt(value):
    """
    Exact square root of a nonnegative rational.

    Args:
        value (Fraction): The radicand.

    Returns:
        root (Fraction or None): The nonnegative root, or None when
            `value` is not the square of a rational.

    """
    value = Fraction(value)
    if value < 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def multinomial(counts):
    """
    The multinomial coefficient (sum counts)! / prod(count!).

    """
    result = factorial(sum(counts))
    for count in counts:
        result //= factorial(count)
    return result


def factorial_product(counts):
    """prod(count!) over `counts`."""
    result = 1
    for count in counts:
        result *= factorial(count)
    return result


def lcm(*values):
    """Least common multiple of positive integers."""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)
