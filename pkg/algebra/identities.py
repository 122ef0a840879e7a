"""Executable checks of the identity chain behind the Hilbert series theorems.

Every check returns VerificationReport objects; suites run a check over a
parameter grid and report every failure instead of stopping at the first.
"""
import math
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional, Tuple

from loguru import logger

from algebra.combinatorics import (
    NarayanaFamily,
    RootSystemType,
    catalan_classic,
    catalan_ddim,
    catalan_rowsum_terms,
    catalan_weyl,
    exponents_and_coxeter,
    grassmannian_h_vector,
    narayana_ddim,
    narayana_row,
    narayana_typed,
    weyl_group_order,
)
from algebra.exact import binomial, factorial, falling_factorial, to_decimal_string
from algebra.hilbert import (
    apply_grassmannian_operator,
    grassmannian_weight,
    hilbert_grassmannian,
    hilbert_highest_weight,
    operator_series,
)
from algebra.root_weights import (
    DominantWeight,
    dual_weight,
    fundamental_weight,
    highest_root,
    pole_order,
)
from algebra.series import (
    Polynomial,
    TruncatedSeries,
    expand,
    geometric_pole,
    reconstruct_numerator,
)
from algebra.weyl_dim import (
    dim_adjoint_product,
    dim_adjoint_scaled,
    dim_grassmannian,
    dim_grassmannian_double_product,
    weyl_dim,
)
from core.logging_system import ComputationError, ErrorCategory, range_error
from core.models import SuiteRanges, VerificationReport


# --- Reports ---

def _canonical(value: Any) -> Any:
    if isinstance(value, Polynomial):
        return value.coefficients
    if isinstance(value, TruncatedSeries):
        return value.coefficients
    if isinstance(value, list):
        return tuple(value)
    return value


def _witness(value: Any) -> str:
    value = _canonical(value)
    if isinstance(value, tuple):
        return "[" + ", ".join(_witness(v) for v in value) + "]"
    if isinstance(value, (int, Fraction)):
        return to_decimal_string(value)
    return str(value)


def compare(identity: str, point: Dict[str, int], left: Any, right: Any) -> VerificationReport:
    if _canonical(left) == _canonical(right):
        return VerificationReport(identity=identity, point=point, status="pass")
    return VerificationReport(
        identity=identity, point=point, status="fail", left=_witness(left), right=_witness(right),
    )


# --- Li Shan-lan ---

def li_shanlan_check(n: int, m: int, upper: Optional[int] = None) -> VerificationReport:
    """binom(m+n,n)^2 = sum_{i<=upper} binom(n,i)^2 binom(2n+m-i,2n); upper defaults to n."""
    if n < 0 or m < 0:
        raise range_error("(n, m)", (n, m), "n, m >= 0")
    upper = n if upper is None else upper
    if upper < min(n, m):
        raise range_error("upper", upper, f"upper >= min(n, m) = {min(n, m)}")
    left = binomial(m + n, n) ** 2
    right = sum(binomial(n, i) ** 2 * binomial(2 * n + m - i, 2 * n) for i in range(upper + 1))
    return compare("li-shanlan", {"n": n, "m": m, "upper": upper}, left, right)


# --- Legendre polynomials and the Hurwitz formula ---

def legendre_poly(n: int) -> Polynomial:
    """P_n(t) = sum_k binom(n,k) binom(n+k,n) (-1)^{n-k} ((t+1)/2)^k."""
    if n < 0:
        raise range_error("n", n, "n >= 0")
    half_shift = Polynomial((Fraction(1, 2), Fraction(1, 2)))
    result = Polynomial()
    for k in range(n + 1):
        sign = -1 if (n - k) % 2 else 1
        result = result + (sign * binomial(n, k) * binomial(n + k, n)) * half_shift ** k
    return result


def legendre_ode_check(n: int) -> VerificationReport:
    """(1-t^2)P'' - 2tP' + n(n+1)P = 0 exactly, with P(-1) = (-1)^n and P'(-1) = n(n+1)/2 (-1)^{n+1}."""
    p = legendre_poly(n)
    dp = p.derivative()
    ddp = dp.derivative()
    ode = Polynomial((1, 0, -1)) * ddp - Polynomial((0, 2)) * dp + n * (n + 1) * p
    point = {"n": n}
    if not ode.is_zero:
        return compare("legendre-ode", point, ode, Polynomial())

    sign = -1 if n % 2 else 1
    left = (p(-1), dp(-1))
    right = (sign, Fraction(n * (n + 1), 2) * -sign)
    return compare("legendre-ode", point, left, right)


def hurwitz_poly(n: int) -> Polynomial:
    """(1-x)^n P_n((1+x)/(1-x)) = sum_k c_k (1+x)^k (1-x)^{n-k} for P_n = sum_k c_k t^k."""
    p = legendre_poly(n)
    one_plus = Polynomial((1, 1))
    one_minus = Polynomial((1, -1))
    result = Polynomial()
    for k, c in enumerate(p.coefficients):
        if c:
            result = result + c * (one_plus ** k) * (one_minus ** (n - k))
    return result


def hurwitz_check(n: int) -> VerificationReport:
    """The Hurwitz expansion equals the type-B Narayana row binom(n,i)^2."""
    return compare(
        "hurwitz", {"n": n}, hurwitz_poly(n), narayana_row(NarayanaFamily.B, n).coefficients,
    )


# --- V_n(x) in five representations ---

class VnMode(str, Enum):
    BINOMSQ = "binomsq"
    CLOSED = "closed"
    LEIBNIZ = "leibniz"
    SHIFTED = "shifted"
    LEGENDRE = "legendre"


def x_minus_one_pole(e: int, order: int) -> TruncatedSeries:
    """(x-1)^{-e} = (-1)^e (1-x)^{-e}; the one place this sign is applied."""
    pole = geometric_pole(e, order)
    return -pole if e % 2 else pole


def leibniz_coefficient(n: int, k: int) -> int:
    """Coefficient of -(x-1)^{-2n+k-1} after Leibniz's rule on z^n (z+x)^{-n-1} at z = -1."""
    return binomial(n, k) * binomial(2 * n - k, n)


def vn_series(n: int, order: int, mode: VnMode = VnMode.BINOMSQ) -> TruncatedSeries:
    """V_n(x) = -(1/n!) d^n/dz^n (z^n / (z+x)^{n+1}) at z = -1, truncated at `order`."""
    if n < 0:
        raise range_error("n", n, "n >= 0")
    if order < 0:
        raise range_error("order", order, "order >= 0")
    try:
        mode = VnMode(mode)
    except ValueError:
        raise ComputationError(
            "unknown_mode", ErrorCategory.USAGE, mode=mode, known=", ".join(m.value for m in VnMode),
        ) from None

    if mode is VnMode.BINOMSQ:
        return TruncatedSeries(order, tuple(binomial(n + k, k) ** 2 for k in range(order + 1)))

    if mode is VnMode.CLOSED:
        # z^{-k-1} differentiated n times is falling_factorial(-k-1, n) z^{-k-1-n}; at z = -1
        n_fact = factorial(n)
        coefficients = []
        for k in range(order + 1):
            at_minus_one = -1 if (n + k + 1) % 2 else 1
            value = -binomial(-n - 1, k) * falling_factorial(-k - 1, n) * at_minus_one
            coefficients.append(Fraction(value, n_fact))
        return TruncatedSeries(order, tuple(coefficients))

    if mode is VnMode.LEIBNIZ:
        result = TruncatedSeries.zero(order)
        for k in range(n + 1):
            result = result - leibniz_coefficient(n, k) * x_minus_one_pole(2 * n + 1 - k, order)
        return result

    pole = geometric_pole(2 * n + 1, order)
    if mode is VnMode.SHIFTED:
        x_minus_one = Polynomial((-1, 1))
        front = Polynomial()
        for k in range(n + 1):
            front = front + (binomial(n, k) * binomial(n + k, n)) * x_minus_one ** (n - k)
        return front * pole

    return hurwitz_poly(n) * pole


def vn_check(n: int, order: int, mode: VnMode) -> VerificationReport:
    return compare(
        f"vn-{VnMode(mode).value}", {"n": n, "order": order},
        vn_series(n, order, mode), vn_series(n, order, VnMode.BINOMSQ),
    )


# --- Dimension identities ---

def sulanke_check(d: int, n: int, k: int) -> VerificationReport:
    """dim V_{k omega_{n+1}} = sum_i N_A(d,n,i) binom(d(n+1)+k-i, d(n+1))."""
    row = grassmannian_h_vector(d, n)
    right = sum(
        row[i] * binomial(d * (n + 1) + k - i, d * (n + 1)) for i in range(min(k, len(row) - 1) + 1)
    )
    return compare("sulanke", {"d": d, "n": n, "k": k}, dim_grassmannian(d, n, k), right)


def dimrep2_check(n: int, k: int) -> VerificationReport:
    """dim V_{k theta} = sum_i binom(n,i)^2 binom(k-i+2n-1, 2n-1)."""
    right = sum(binomial(n, i) ** 2 * binomial(k - i + 2 * n - 1, 2 * n - 1) for i in range(n + 1))
    return compare("dimrep2", {"n": n, "k": k}, weyl_dim(highest_root(n).scale(k)), right)


def grassmannian_closed_form_check(d: int, n: int, k: int) -> List[VerificationReport]:
    point = {"d": d, "n": n, "k": k}
    general = weyl_dim(fundamental_weight(n + d, n + 1).scale(k))
    return [
        compare("grassmannian-closed-form", point, general, dim_grassmannian(d, n, k)),
        compare("grassmannian-double-product", point, general, dim_grassmannian_double_product(d, n, k)),
    ]


def adjoint_closed_form_check(n: int, k: int) -> List[VerificationReport]:
    point = {"n": n, "k": k}
    general = weyl_dim(highest_root(n).scale(k))
    return [
        compare("adjoint-closed-form", point, general, dim_adjoint_scaled(n, k)),
        compare("adjoint-product", point, general, dim_adjoint_product(n, k)),
    ]


def weight_checks(labels: Tuple[int, ...], k_max: int) -> List[VerificationReport]:
    """Pole-order guard, duality and strict growth of k -> dim V_{kw} for one weight."""
    w = DominantWeight(labels)
    point = {f"l{i}": label for i, label in enumerate(labels, start=1)}
    reports = []

    d = pole_order(w)
    try:
        reconstruct_numerator(lambda k: weyl_dim(w.scale(k)), d)
        reports.append(compare("pole-order-guard", point, d, d))
    except ComputationError as e:
        reports.append(compare("pole-order-guard", point, d, e.message))

    reports.append(compare("pole-order-dual", point, d, pole_order(dual_weight(w))))
    dims = [weyl_dim(w.scale(k)) for k in range(k_max + 1)]
    reports.append(compare("weyl-dim-dual", point, weyl_dim(w), weyl_dim(dual_weight(w))))
    growth = all(a < b for a, b in zip(dims, dims[1:]))
    reports.append(compare("weyl-dim-increasing", point, growth, True))
    return reports


# --- Hilbert series numerators ---

def grassmannian_numerator_check(d: int, n: int) -> VerificationReport:
    series = hilbert_highest_weight(grassmannian_weight(d, n))
    return compare(
        "grassmannian-numerator", {"d": d, "n": n},
        (series.h_vector, series.pole_order),
        (grassmannian_h_vector(d, n), d * (n + 1) + 1),
    )


def gr2_numerator_check(n: int) -> VerificationReport:
    series = hilbert_highest_weight(grassmannian_weight(2, n))
    return compare(
        "gr2-numerator", {"n": n},
        (series.h_vector, series.pole_order),
        (narayana_row(NarayanaFamily.CLASSIC, n + 1).coefficients, 2 * n + 3),
    )


def min_orbit_numerator_check(n: int) -> VerificationReport:
    series = hilbert_highest_weight(highest_root(n))
    return compare(
        "min-orbit-numerator", {"n": n},
        (series.h_vector, series.pole_order, series.degree),
        (tuple(binomial(n, i) ** 2 for i in range(n + 1)), 2 * n, binomial(2 * n, n)),
    )


def operator_check(d: int, n: int, order: int) -> VerificationReport:
    return compare(
        "operator", {"d": d, "n": n, "order": order},
        operator_series(d, n, order), expand(hilbert_grassmannian(d, n, check=False), order),
    )


def operator_step_check(d: int, n: int, order: int) -> VerificationReport:
    """h_n = (d_t^d o T^{d-1}) h_{n-1} / prod_{i=1..d} (n+i)."""
    if n < 1:
        raise range_error("n", n, "n >= 1")
    previous = expand(hilbert_grassmannian(d, n - 1, check=False), order + 1)
    divisor = 1
    for i in range(1, d + 1):
        divisor *= n + i
    stepped = apply_grassmannian_operator(previous, d).truncate(order).divide(divisor)
    return compare(
        "operator-step", {"d": d, "n": n, "order": order},
        stepped, expand(hilbert_grassmannian(d, n, check=False), order),
    )


# --- Catalan laws ---

def row_sum_check(family: NarayanaFamily, n: int, d: Optional[int] = None) -> VerificationReport:
    row = narayana_row(family, n, d)
    point = {"n": n} if d is None else {"d": d, "n": n}
    return compare(f"row-sum-{NarayanaFamily(family).value}", point, row.total, row.catalan_target())


def ddim_symmetry_check(d: int, n: int) -> VerificationReport:
    row = narayana_row(NarayanaFamily.DDIM, n, d).coefficients
    return compare("ddim-symmetry", {"d": d, "n": n}, row, tuple(reversed(row)))


def ddim_classic_check(n: int) -> List[VerificationReport]:
    """N_{2,n,k} = N_{n,k}, N_A(n,k) = N_{2,n+1,k} and C_{2,n} = Cat_n."""
    reports = [compare("ddim-classic", {"n": n}, catalan_ddim(2, n), catalan_classic(n))]
    if n >= 1:
        reports.append(compare(
            "ddim-narayana-classic", {"n": n},
            narayana_row(NarayanaFamily.DDIM, n, 2).coefficients,
            narayana_row(NarayanaFamily.CLASSIC, n).coefficients,
        ))
    reports.append(compare(
        "typed-a-ddim", {"n": n},
        tuple(narayana_typed("A", n, k) for k in range(n + 1)),
        tuple(narayana_ddim(2, n + 1, k) for k in range(n + 1)),
    ))
    return reports


def rowsum_derivation_check(n: int) -> VerificationReport:
    telescoped, difference, catalan = catalan_rowsum_terms(n)
    row_total = narayana_row(NarayanaFamily.CLASSIC, n).total
    return compare("catalan-rowsum-derivation", {"n": n}, (row_total, telescoped, difference), (catalan,) * 3)


def catalan_weyl_check(letter: str, rank: int) -> List[VerificationReport]:
    root_type = RootSystemType(letter, rank)
    exponents, h = exponents_and_coxeter(root_type)
    point = {"rank": rank}
    name = f"catalan-weyl-{root_type.letter}"
    reports = [
        compare(f"{name}-weyl-order", point, math.prod(e + 1 for e in exponents), weyl_group_order(root_type)),
        compare(f"{name}-exponent-sum", point, 2 * sum(exponents), rank * h),
    ]
    value = catalan_weyl(root_type)
    if root_type.letter == "A":
        reports.append(compare(f"{name}-classic", point, value, catalan_classic(rank + 1)))
    if root_type.letter in ("B", "C"):
        reports.append(compare(f"{name}-central-binomial", point, value, binomial(2 * rank, rank)))
    return reports


# --- Suites ---

Task = Tuple[Callable[..., Any], Tuple[Any, ...]]


def _li_shanlan_tasks(b: Dict[str, int]) -> List[Task]:
    return [(li_shanlan_check, (n, m)) for n in range(b["n_max"] + 1) for m in range(b["m_max"] + 1)]


def _sulanke_tasks(b: Dict[str, int]) -> List[Task]:
    return [
        (sulanke_check, (d, n, k))
        for d in range(1, b["d_max"] + 1) for n in range(b["n_max"] + 1) for k in range(b["k_max"] + 1)
    ]


def _dimrep2_tasks(b: Dict[str, int]) -> List[Task]:
    return [(dimrep2_check, (n, k)) for n in range(1, b["n_max"] + 1) for k in range(b["k_max"] + 1)]


def _operator_tasks(b: Dict[str, int]) -> List[Task]:
    return [(operator_check, (d, n, b["order"])) for d in range(1, b["d_max"] + 1) for n in range(b["n_max"] + 1)]


def _operator_step_tasks(b: Dict[str, int]) -> List[Task]:
    return [
        (operator_step_check, (d, n, b["order"]))
        for d in range(1, b["d_max"] + 1) for n in range(1, b["n_max"] + 1)
    ]


def _legendre_tasks(b: Dict[str, int]) -> List[Task]:
    return [(legendre_ode_check, (n,)) for n in range(b["n_max"] + 1)]


def _hurwitz_tasks(b: Dict[str, int]) -> List[Task]:
    return [(hurwitz_check, (n,)) for n in range(b["n_max"] + 1)]


def _vn_tasks(b: Dict[str, int]) -> List[Task]:
    modes = [m for m in VnMode if m is not VnMode.BINOMSQ]
    return [(vn_check, (n, b["order"], mode)) for n in range(b["n_max"] + 1) for mode in modes]


def _narayana_numerator_tasks(b: Dict[str, int]) -> List[Task]:
    n_max = b["n_max"]
    tasks: List[Task] = [
        (grassmannian_numerator_check, (d, n))
        for d in range(1, b["d_max"] + 1) for n in range(n_max + 1)
    ]
    tasks += [(gr2_numerator_check, (n,)) for n in range(n_max + 1)]
    tasks += [(min_orbit_numerator_check, (n,)) for n in range(1, b["orbit_n_max"] + 1)]
    return tasks


def _catalan_law_tasks(b: Dict[str, int]) -> List[Task]:
    n_max, d_max, rank_max = b["n_max"], b["d_max"], b["rank_max"]
    tasks: List[Task] = []
    tasks += [(row_sum_check, (NarayanaFamily.CLASSIC, n)) for n in range(1, n_max + 1)]
    tasks += [(row_sum_check, (family, n)) for family in (NarayanaFamily.A, NarayanaFamily.B) for n in range(n_max + 1)]
    tasks += [(row_sum_check, (NarayanaFamily.DDIM, n, d)) for d in range(2, d_max + 1) for n in range(1, n_max + 1)]
    tasks += [(row_sum_check, (NarayanaFamily.DDIM_A, n, d)) for d in range(2, d_max + 1) for n in range(n_max + 1)]
    tasks += [(ddim_symmetry_check, (d, n)) for d in range(2, d_max + 1) for n in range(1, n_max + 1)]
    tasks += [(ddim_classic_check, (n,)) for n in range(b["classic_n_max"] + 1)]
    tasks += [(rowsum_derivation_check, (n,)) for n in range(1, n_max + 1)]
    for letter, low in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        tasks += [(catalan_weyl_check, (letter, rank)) for rank in range(low, rank_max + 1)]
    tasks += [(catalan_weyl_check, (letter, rank)) for letter, rank in
              (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))]
    return tasks


def sample_weights(rank_max: int) -> List[Tuple[int, ...]]:
    """Fundamental weights and theta up to rank_max, all {0,1,2}-labels up to rank 3,
    all {0,1}-labels up to rank 5, and from rank 6 on the {0,1}-labels with at most
    two ones plus rho."""
    seen: Dict[Tuple[int, ...], None] = {}
    for rank in range(1, rank_max + 1):
        for i in range(1, rank + 1):
            seen[fundamental_weight(rank, i).labels] = None
        seen[highest_root(rank).labels] = None
    for rank in range(1, min(rank_max, 3) + 1):
        for labels in product(range(3), repeat=rank):
            if any(labels):
                seen[labels] = None
    for rank in range(4, min(rank_max, 5) + 1):
        for labels in product(range(2), repeat=rank):
            if any(labels):
                seen[labels] = None
    for rank in range(6, rank_max + 1):
        for i, j in combinations(range(rank), 2):
            seen[tuple(int(p in (i, j)) for p in range(rank))] = None
        seen[(1,) * rank] = None
    return list(seen)


def _weyl_triangulation_tasks(b: Dict[str, int]) -> List[Task]:
    d_max, n_max, k_max = b["d_max"], b["n_max"], b["k_max"]
    tasks: List[Task] = []
    tasks += [
        (grassmannian_closed_form_check, (d, n, k))
        for d in range(1, d_max + 1) for n in range(n_max + 1) for k in range(k_max + 1)
    ]
    tasks += [(adjoint_closed_form_check, (n, k)) for n in range(1, n_max + 1) for k in range(k_max + 1)]
    tasks += [(weight_checks, (labels, 4)) for labels in sample_weights(b["rank_max"])]
    return tasks


SUITES: Dict[str, Tuple[Dict[str, int], Callable[[Dict[str, int]], List[Task]]]] = {
    "li-shanlan": ({"n_max": 40, "m_max": 40}, _li_shanlan_tasks),
    "sulanke": ({"d_max": 4, "n_max": 6, "k_max": 25}, _sulanke_tasks),
    "dimrep2": ({"n_max": 8, "k_max": 25}, _dimrep2_tasks),
    "operator": ({"d_max": 3, "n_max": 4, "order": 60}, _operator_tasks),
    "operator-step": ({"d_max": 3, "n_max": 4, "order": 40}, _operator_step_tasks),
    "legendre": ({"n_max": 25}, _legendre_tasks),
    "hurwitz": ({"n_max": 25}, _hurwitz_tasks),
    "vn": ({"n_max": 10, "order": 40}, _vn_tasks),
    "narayana-numerators": ({"d_max": 4, "n_max": 8, "orbit_n_max": 10}, _narayana_numerator_tasks),
    "catalan-laws": ({"d_max": 4, "n_max": 6, "classic_n_max": 12, "rank_max": 12}, _catalan_law_tasks),
    "weyl-triangulation": ({"d_max": 4, "n_max": 8, "k_max": 30, "rank_max": 8}, _weyl_triangulation_tasks),
}

SUITE_NAMES: Tuple[str, ...] = tuple(SUITES) + ("all",)


def _run_task(task: Task) -> List[VerificationReport]:
    check, args = task
    outcome = check(*args)
    return outcome if isinstance(outcome, list) else [outcome]


def suite_tasks(suite: str, ranges: Optional[SuiteRanges] = None) -> List[Task]:
    ranges = ranges or SuiteRanges()
    if suite == "all":
        return [task for name in SUITES for task in suite_tasks(name, ranges)]
    if suite not in SUITES:
        raise ComputationError("unknown_suite", ErrorCategory.USAGE, suite=suite, known=", ".join(SUITE_NAMES))
    defaults, build = SUITES[suite]
    return build(ranges.resolve(defaults))


def run_suite(suite: str, ranges: Optional[SuiteRanges] = None) -> List[VerificationReport]:
    """One report per grid point (several for multi-part checks), in deterministic order."""
    ranges = ranges or SuiteRanges()
    tasks = suite_tasks(suite, ranges)
    logger.bind(command="verify").debug(f"Suite {suite}: {len(tasks)} tasks on {ranges.workers} worker(s)")

    if ranges.workers > 1:
        with ProcessPoolExecutor(max_workers=ranges.workers) as pool:
            outcomes = list(pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * ranges.workers))))
    else:
        outcomes = [_run_task(task) for task in tasks]
    return [report for outcome in outcomes for report in outcome]
