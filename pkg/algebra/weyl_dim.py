"""Weyl dimension formula for A_m and the closed forms derived from it."""
from algebra.exact import binomial, exact_quotient
from algebra.root_weights import WeightLike, as_weight, shifted_pairings
from core.logging_system import range_error


def weyl_dim(w: WeightLike) -> int:
    """dim V_w = prod over positive roots of <w+rho,alpha>/<rho,alpha>."""
    w = as_weight(w)
    numerator = 1
    denominator = 1
    for shifted, height in shifted_pairings(w):
        numerator *= shifted
        denominator *= height
    return exact_quotient(numerator, denominator, f"dim V_{w}")


def _check_grassmannian_params(d: int, n: int, k: int):
    if d < 1:
        raise range_error("d", d, "d >= 1")
    if n < 0:
        raise range_error("n", n, "n >= 0")
    if k < 0:
        raise range_error("k", k, "k >= 0")


def dim_grassmannian(d: int, n: int, k: int) -> int:
    """dim V_{k omega_{n+1}} for sl_{n+d+1} as a product of binomial ratios."""
    _check_grassmannian_params(d, n, k)
    numerator = 1
    denominator = 1
    for i in range(d):
        numerator *= binomial(k + n + 1 + i, n + 1)
        denominator *= binomial(n + 1 + i, n + 1)
    return exact_quotient(numerator, denominator, f"dim V_{{{k}w_{n + 1}}}")


def dim_grassmannian_double_product(d: int, n: int, k: int) -> int:
    """Same dimension, as the double product over i < d, j <= n of (k+(n+1)+i-j)/((n+1)+i-j)."""
    _check_grassmannian_params(d, n, k)
    numerator = 1
    denominator = 1
    for i in range(d):
        for j in range(n + 1):
            numerator *= k + (n + 1) + i - j
            denominator *= (n + 1) + i - j
    return exact_quotient(numerator, denominator, f"dim V_{{{k}w_{n + 1}}}")


def dim_adjoint_scaled(n: int, k: int) -> int:
    """dim V_{k theta} for sl_{n+1}: binom(k+n,n)^2 - binom(k-1+n,n)^2."""
    if n < 1:
        raise range_error("n", n, "n >= 1")
    if k < 0:
        raise range_error("k", k, "k >= 0")
    return binomial(k + n, n) ** 2 - binomial(k - 1 + n, n) ** 2


def dim_adjoint_product(n: int, k: int) -> int:
    """dim V_{k theta} as binom(k+n-1,n-1)^2 (2k+n)/n."""
    if n < 1:
        raise range_error("n", n, "n >= 1")
    if k < 0:
        raise range_error("k", k, "k >= 0")
    return exact_quotient(binomial(k + n - 1, n - 1) ** 2 * (2 * k + n), n, f"dim V_{{{k}theta}}")
