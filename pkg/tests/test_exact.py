from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from algebra.exact import (
    as_integer,
    binomial,
    exact_quotient,
    factorial,
    falling_factorial,
    normalize,
    to_decimal_string,
)
from core.logging_system import ComputationError, ErrorCategory


@pytest.mark.parametrize("a, k, expected", [
    (5, 2, 10),
    (0, 0, 1),
    (3, 5, 0),
    (-1, 3, -1),
    (-3, 2, 6),
    (-2, 3, -4),
    (7, -1, 0),
    (-4, -2, 0),
])
def test_binomial_values(a, k, expected):
    assert binomial(a, k) == expected


@given(st.integers(-40, 40), st.integers(0, 25))
def test_binomial_matches_sympy(a, k):
    assert binomial(a, k) == int(sympy.binomial(a, k))


@given(st.integers(-40, 40), st.integers(0, 25))
def test_pascal_rule(a, k):
    assert binomial(a, k) == binomial(a - 1, k - 1) + binomial(a - 1, k)


@given(st.integers(1, 40), st.integers(0, 25))
def test_upper_negation(a, k):
    assert binomial(-a, k) == (-1) ** k * binomial(a + k - 1, k)


def test_factorials():
    assert factorial(0) == 1
    assert factorial(6) == 720
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(-1, 3) == -6
    with pytest.raises(ComputationError) as excinfo:
        factorial(-1)
    assert excinfo.value.category == ErrorCategory.RANGE


def test_exact_quotient_rejects_remainder():
    assert exact_quotient(42, 6, "x") == 7
    with pytest.raises(ComputationError) as excinfo:
        exact_quotient(7, 2, "seven halves")
    assert excinfo.value.category == ErrorCategory.INVARIANT
    assert excinfo.value.exit_code == 1
    assert "7/2" in excinfo.value.message


def test_integral_rationals_collapse_to_int():
    assert normalize(Fraction(6, 3)) == 2
    assert isinstance(normalize(Fraction(6, 3)), int)
    assert as_integer(Fraction(10, 5), "x") == 2
    with pytest.raises(ComputationError):
        as_integer(Fraction(1, 3), "a third")


@settings(max_examples=200)
@given(st.integers(-10**40, 10**40), st.integers(1, 10**20))
def test_decimal_strings_are_exact(p, q):
    text = to_decimal_string(Fraction(p, q))
    num, _, den = text.partition("/")
    assert Fraction(int(num), int(den or 1)) == Fraction(p, q)


def test_big_integers_print_in_full():
    assert to_decimal_string(2 ** 200) == str(2 ** 200)
