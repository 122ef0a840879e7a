"""Hilbert series of highest weight varieties: Grassmannian cones and the minimal orbit closure."""
from typing import Optional, Sequence

from loguru import logger

from algebra.combinatorics import grassmannian_h_vector
from algebra.exact import binomial
from algebra.root_weights import (
    WeightLike,
    as_weight,
    dual_weight,
    fundamental_weight,
    highest_root,
    pole_order,
)
from algebra.series import (
    HilbertSeries,
    TruncatedSeries,
    derive,
    geometric_pole,
    reconstruct_numerator,
    shift_t,
)
from algebra.weyl_dim import weyl_dim
from core.config import settings
from core.logging_system import ComputationError, ErrorCategory, range_error


def hilbert_highest_weight(w: WeightLike) -> HilbertSeries:
    """h(t) = sum_k dim V_{k w-bar} t^k, as numerator / (1-t)^D."""
    w = as_weight(w)
    if w.is_zero:
        raise ComputationError("zero_weight", ErrorCategory.DOMAIN)
    dual = dual_weight(w)
    series = reconstruct_numerator(lambda k: weyl_dim(dual.scale(k)), pole_order(w))
    if not series.is_coordinate_ring():
        raise ComputationError(
            "invariant_violation", ErrorCategory.INVARIANT,
            what=f"Hilbert series of X_{w}",
            detail=f"numerator {list(series.h_vector)} is not an h-vector of a coordinate ring",
        )
    logger.debug(f"X_{w}: numerator {list(series.h_vector)}, pole order {series.pole_order}")
    return series


def _assert_contract(what: str, series: HilbertSeries, numerator: Sequence[int], pole: int):
    if series.h_vector != tuple(numerator) or series.pole_order != pole:
        raise ComputationError(
            "contract_violation", ErrorCategory.INVARIANT,
            what=what,
            computed=f"{list(series.h_vector)}/(1-t)^{series.pole_order}",
            expected=f"{list(numerator)}/(1-t)^{pole}",
        )


def grassmannian_weight(d: int, n: int):
    """omega_d of A_{n+d}: the Pluecker cone of Gr(d, n+d+1)."""
    if d < 1:
        raise range_error("d", d, "d >= 1")
    if n < 0:
        raise range_error("n", n, "n >= 0")
    return fundamental_weight(n + d, d)


def hilbert_grassmannian(d: int, n: int, check: Optional[bool] = None) -> HilbertSeries:
    """Cone over Gr(d, n+d+1); numerator N_A(d,n,i), pole order d(n+1)+1."""
    series = hilbert_highest_weight(grassmannian_weight(d, n))
    if settings.ASSERT_CONTRACTS if check is None else check:
        _assert_contract(f"Hilbert series of Gr({d},{n + d + 1})", series, grassmannian_h_vector(d, n), d * (n + 1) + 1)
    return series


def hilbert_min_orbit(n: int, check: Optional[bool] = None) -> HilbertSeries:
    """Closure of the minimal nilpotent orbit of sl_{n+1}; numerator binom(n,i)^2, pole order 2n."""
    if n < 1:
        raise range_error("n", n, "n >= 1")
    series = hilbert_highest_weight(highest_root(n))
    if settings.ASSERT_CONTRACTS if check is None else check:
        _assert_contract(
            f"Hilbert series of the minimal orbit of sl_{n + 1}",
            series, [binomial(n, i) ** 2 for i in range(n + 1)], 2 * n,
        )
    return series


def operator_denominator(d: int, n: int) -> int:
    result = 1
    for i in range(1, d + 1):
        for j in range(1, n + 1):
            result *= i + j
    return result


def apply_grassmannian_operator(s: TruncatedSeries, d: int) -> TruncatedSeries:
    """One application of d_t^d o T^{d-1}."""
    for _ in range(d - 1):
        s = shift_t(s)
    for _ in range(d):
        s = derive(s)
    return s


def operator_series(d: int, n: int, order: int, working_order: Optional[int] = None) -> TruncatedSeries:
    """(d_t^d o T^{d-1})^n [(1-t)^{-(d+1)}] / prod_{i<=d, j<=n} (i+j), truncated at `order`."""
    if d < 1:
        raise range_error("d", d, "d >= 1")
    if n < 0:
        raise range_error("n", n, "n >= 0")
    if order < 0:
        raise range_error("order", order, "order >= 0")
    working = order + n * d if working_order is None else working_order
    # every round loses one order: d derivatives against d-1 shifts
    if working - n < order:
        raise ComputationError("insufficient_order", ErrorCategory.RANGE, working=working, needed=order + 1)
    logger.debug(f"operator_series d={d} n={n}: working order {working}")

    s = geometric_pole(d + 1, working)
    for _ in range(n):
        s = apply_grassmannian_operator(s, d)
    result = s.truncate(order).divide(operator_denominator(d, n))
    if not result.is_integral():
        raise ComputationError(
            "invariant_violation", ErrorCategory.INVARIANT,
            what=f"operator series d={d} n={n}", detail="non-integral coefficient",
        )
    return result
