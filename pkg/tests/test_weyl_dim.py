import pytest
import sympy
from hypothesis import given, strategies as st

from algebra.root_weights import DominantWeight, dual_weight, fundamental_weight, highest_root
from algebra.weyl_dim import (
    dim_adjoint_product,
    dim_adjoint_scaled,
    dim_grassmannian,
    dim_grassmannian_double_product,
    weyl_dim,
)
from core.logging_system import ComputationError, ErrorCategory


@pytest.mark.parametrize("labels, expected", [
    ((1,), 2),
    ((3,), 4),
    ((1, 0), 3),
    ((2, 0), 6),
    ((1, 1), 8),
    ((1, 0, 0), 4),
    ((0, 1, 0), 6),
    ((1, 0, 1), 15),
    ((0, 2, 0), 20),
])
def test_known_dimensions(labels, expected):
    assert weyl_dim(labels) == expected


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5).map(tuple))
def test_dual_representation_has_the_same_dimension(labels):
    w = DominantWeight(labels)
    assert weyl_dim(dual_weight(w)) == weyl_dim(w)


@given(st.integers(1, 6), st.integers(0, 8))
def test_symmetric_powers_of_the_standard_representation(m, k):
    assert weyl_dim(fundamental_weight(m, 1).scale(k)) == int(sympy.binomial(m + k, k))


@pytest.mark.parametrize("d", range(1, 5))
@pytest.mark.parametrize("n", range(0, 5))
def test_grassmannian_closed_forms(d, n):
    for k in range(8):
        general = weyl_dim(fundamental_weight(n + d, d).scale(k))
        assert dim_grassmannian(d, n, k) == general
        assert dim_grassmannian_double_product(d, n, k) == general


def test_pluecker_coordinates():
    # linear forms on the cone over Gr(2,5): the 10 Pluecker coordinates
    assert dim_grassmannian(2, 2, 1) == 10
    assert dim_grassmannian(2, 2, 0) == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_adjoint_closed_forms(n):
    assert dim_adjoint_scaled(n, 1) == n * (n + 2)
    for k in range(8):
        general = weyl_dim(highest_root(n).scale(k))
        assert dim_adjoint_scaled(n, k) == general
        assert dim_adjoint_product(n, k) == general


@pytest.mark.parametrize("call", [
    lambda: dim_grassmannian(0, 1, 1),
    lambda: dim_grassmannian(1, -1, 1),
    lambda: dim_grassmannian_double_product(1, 1, -1),
    lambda: dim_adjoint_scaled(0, 1),
    lambda: dim_adjoint_product(2, -1),
])
def test_range_errors(call):
    with pytest.raises(ComputationError) as excinfo:
        call()
    assert excinfo.value.category == ErrorCategory.RANGE
