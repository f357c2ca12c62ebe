"""Exact arithmetic on the rational unit interval.

Every algebra in this package stores its values as reduced ``Fraction``
objects in [0, 1]; there is no floating point anywhere, so equality is
always decidable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import UndefinedPartialSum

Rat01 = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat01(value, denominator=None) -> Fraction:
    """Build a checked rational in [0, 1].

    Accepts a Fraction, an int, a "num/den" string, or a numerator and a
    denominator.  Raises ValueError outside the unit interval.
    """
    q = Fraction(value) if denominator is None else Fraction(value, denominator)
    if q < ZERO or q > ONE:
        raise ValueError(f"value {q} lies outside [0, 1]")
    return q


def parse_rat(text: str) -> Fraction:
    return rat01(Fraction(text.strip()))


def format_rat(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def oplus(x: Fraction, y: Fraction) -> Fraction:
    """Truncated sum min(1, x + y)."""
    return min(ONE, x + y)


def neg(x: Fraction) -> Fraction:
    """Involution 1 - x."""
    return ONE - x


def odot(x: Fraction, y: Fraction) -> Fraction:
    """Truncated product max(0, x + y - 1)."""
    return max(ZERO, x + y - ONE)


def meet(x: Fraction, y: Fraction) -> Fraction:
    return min(x, y)


def join(x: Fraction, y: Fraction) -> Fraction:
    return max(x, y)


def partial_add(x: Fraction, y: Fraction) -> Fraction:
    """Exact sum, defined only when x <= 1 - y."""
    if x > neg(y):
        raise UndefinedPartialSum(
            f"{format_rat(x)} + {format_rat(y)} is undefined (sum exceeds 1)"
        )
    return x + y


def den_lcm(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, v.denominator)
    return out


def odd_part(n: int) -> int:
    while n % 2 == 0:
        n //= 2
    return n


def strip_factors(n: int, base: int) -> int:
    """Remove from n every prime factor shared with base."""
    if base <= 1:
        return n
    g = gcd(n, base)
    while g > 1:
        while n % g == 0:
            n //= g
        g = gcd(n, base)
    return n
