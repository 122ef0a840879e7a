from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from algebra.series import (
    HilbertSeries,
    Polynomial,
    TruncatedSeries,
    derive,
    expand,
    geometric_pole,
    mul,
    reconstruct_numerator,
    shift_t,
)
from core.logging_system import ComputationError, ErrorCategory

t = sympy.symbols("t")
coefficient_lists = st.lists(st.integers(-20, 20), max_size=8)


def series_of(order: int):
    return st.lists(st.integers(-20, 20), min_size=order + 1, max_size=order + 1).map(
        lambda cs: TruncatedSeries(order, tuple(cs))
    )


def sympy_coefficients(expr, order: int):
    expansion = sympy.series(expr, t, 0, order + 1).removeO()
    return tuple(int(expansion.coeff(t, j)) for j in range(order + 1))


def as_sympy(p: Polynomial):
    return sum((sympy.Rational(c) * t ** i for i, c in enumerate(p.coefficients)), sympy.Integer(0))


def test_polynomials_are_canonical():
    p = Polynomial((1, 2, 0, 0))
    assert p.coefficients == (1, 2)
    assert p.degree == 1
    assert Polynomial().degree == -1
    assert Polynomial((0, 0)).is_zero
    assert Polynomial((Fraction(4, 2),)).coefficients == (2,)
    assert isinstance(Polynomial((Fraction(4, 2),)).coefficients[0], int)


@given(coefficient_lists, coefficient_lists)
def test_polynomial_product_matches_sympy(a, b):
    p, q = Polynomial(tuple(a)), Polynomial(tuple(b))
    assert sympy.expand(as_sympy(p * q) - as_sympy(p) * as_sympy(q)) == 0


@given(coefficient_lists, st.integers(-5, 5))
def test_evaluation_and_derivative(a, x):
    p = Polynomial(tuple(a))
    assert p(x) == as_sympy(p).subs(t, x)
    assert sympy.expand(as_sympy(p.derivative()) - sympy.diff(as_sympy(p), t)) == 0


def test_powers():
    assert (Polynomial((1, 1)) ** 3).coefficients == (1, 3, 3, 1)
    assert (Polynomial((1, 1)) ** 0).coefficients == (1,)
    with pytest.raises(ComputationError):
        Polynomial((1, 1)) ** -1


@pytest.mark.parametrize("m", range(1, 7))
def test_geometric_pole_matches_sympy(m):
    assert geometric_pole(m, 10).coefficients == sympy_coefficients(1 / (1 - t) ** m, 10)


def test_series_length_must_match_order():
    with pytest.raises(ComputationError) as excinfo:
        TruncatedSeries(3, (1, 2, 3))
    assert excinfo.value.category == ErrorCategory.INVARIANT


def test_truncation_never_extends():
    s = geometric_pole(2, 5)
    assert s.truncate(2).coefficients == (1, 2, 3)
    with pytest.raises(ComputationError) as excinfo:
        s.truncate(6)
    assert excinfo.value.message_key == "insufficient_order"


def test_reading_past_the_order_is_an_error():
    with pytest.raises(ComputationError):
        geometric_pole(2, 3)[4]


def test_derive_and_shift_orders():
    s = geometric_pole(2, 5)
    assert derive(s).order == 4
    assert derive(s).coefficients == (2, 6, 12, 20, 30)
    assert shift_t(s).order == 6
    assert shift_t(s).coefficients == (0, 1, 2, 3, 4, 5, 6)
    assert shift_t(s, cap=5).order == 5
    with pytest.raises(ComputationError):
        derive(TruncatedSeries(0, (1,)))


@settings(max_examples=50)
@given(series_of(6), series_of(6), series_of(6))
def test_product_is_associative_and_commutative(a, b, c):
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@settings(max_examples=50)
@given(series_of(8))
def test_derive_shift_commutator(s):
    # d/dt (t f) - t d/dt f = f, on the orders both sides know
    left = derive(shift_t(s))
    right = shift_t(derive(s))
    assert (left - right).coefficients == s.truncate(right.order).coefficients


def test_product_truncates_to_the_smaller_order():
    assert mul(geometric_pole(1, 3), geometric_pole(1, 7)).order == 3
    assert (Polynomial((1, 1)) * geometric_pole(1, 4)).coefficients == (1, 2, 2, 2, 2)


def test_division_by_an_integer_stays_exact():
    s = TruncatedSeries(2, (1, 2, 3)).divide(2)
    assert s.coefficients == (Fraction(1, 2), 1, Fraction(3, 2))
    assert not s.is_integral()


def test_hilbert_series_invariants():
    h = HilbertSeries(Polynomial((1, 3, 1)), 7)
    assert h.h_vector == (1, 3, 1)
    assert h.degree == 5
    assert h.dimension == 7
    assert h.is_coordinate_ring()

    with pytest.raises(ComputationError) as excinfo:
        HilbertSeries(Polynomial((1, 1, 1)), 2)
    assert excinfo.value.category == ErrorCategory.INVARIANT
    with pytest.raises(ComputationError):
        HilbertSeries(Polynomial((1, Fraction(1, 2))), 3)
    with pytest.raises(ComputationError):
        HilbertSeries(Polynomial((1,)), 0)


def test_expansion_matches_sympy():
    h = HilbertSeries(Polynomial((1, 3, 1)), 7)
    assert expand(h, 12).coefficients == sympy_coefficients((1 + 3 * t + t ** 2) / (1 - t) ** 7, 12)


def test_numerator_reconstruction():
    h = reconstruct_numerator(lambda k: 2 * k + 1, 2)
    assert h.h_vector == (1, 1)
    assert h.pole_order == 2


def test_too_small_pole_order_is_detected():
    with pytest.raises(ComputationError) as excinfo:
        reconstruct_numerator(lambda k: (k + 1) ** 2, 2)
    assert excinfo.value.category == ErrorCategory.POLE_ORDER
    assert excinfo.value.exit_code == 1
