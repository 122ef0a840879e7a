"""Exact integer and rational primitives.

Python's ``int`` is the arbitrary-precision integer and ``fractions.Fraction``
the always-reduced rational; every other module builds on the helpers here.
"""
import math
from fractions import Fraction
from typing import Union

from core.logging_system import ComputationError, ErrorCategory, range_error

BigInt = int
Rational = Fraction
Number = Union[int, Fraction]


def binomial(a: int, k: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-k+1)/k!.

    The upper index may be negative. Returns 0 for k < 0, and for 0 <= a < k.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k)
    # upper negation: binom(-a, k) = (-1)^k binom(a+k-1, k)
    magnitude = math.comb(-a + k - 1, k)
    return -magnitude if k % 2 else magnitude


def factorial(n: int) -> int:
    if n < 0:
        raise range_error("n", n, "n >= 0")
    return math.factorial(n)


def falling_factorial(a: int, n: int) -> int:
    """a(a-1)...(a-n+1); the empty product (n = 0) is 1."""
    if n < 0:
        raise range_error("n", n, "n >= 0")
    return math.prod(range(a, a - n, -1))


def exact_quotient(numerator: int, denominator: int, what: str) -> int:
    """Integer quotient, asserting that the division is exact."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ComputationError(
            "integrality_violation",
            ErrorCategory.INVARIANT,
            what=what,
            value=Fraction(numerator, denominator),
        )
    return quotient


def as_integer(value: Number, what: str) -> int:
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ComputationError("integrality_violation", ErrorCategory.INVARIANT, what=what, value=value)
    return value.numerator


def normalize(value: Number) -> Number:
    """Integral rationals collapse to int so coefficients print and compare as integers."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def to_decimal_string(value: Number) -> str:
    value = normalize(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)
