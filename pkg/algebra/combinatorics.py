"""Catalan and Narayana families: classic, root-system typed and d-dimensional."""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from algebra.exact import as_integer, binomial, exact_quotient, factorial
from core.logging_system import ComputationError, ErrorCategory, range_error


class NarayanaFamily(str, Enum):
    CLASSIC = "classic"
    A = "A"
    B = "B"
    DDIM = "ddim"
    DDIM_A = "ddim-A"


@dataclass(frozen=True)
class NarayanaRow:
    family: NarayanaFamily
    n: int
    coefficients: Tuple[int, ...]
    d: Optional[int] = None

    def __post_init__(self):
        if any(c <= 0 for c in self.coefficients):
            raise ComputationError(
                "invariant_violation",
                ErrorCategory.INVARIANT,
                what=f"Narayana row {self.family.value} n={self.n}",
                detail=f"non-positive entry in {list(self.coefficients)}",
            )

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def catalan_target(self) -> int:
        """The Catalan number this row must sum to."""
        if self.family is NarayanaFamily.CLASSIC:
            return catalan_classic(self.n)
        if self.family is NarayanaFamily.A:
            return catalan_classic(self.n + 1)
        if self.family is NarayanaFamily.B:
            return binomial(2 * self.n, self.n)
        if self.family is NarayanaFamily.DDIM:
            return catalan_ddim(self.d, self.n)
        return catalan_ddim(self.d, self.n + 1)


@dataclass(frozen=True)
class RootSystemType:
    letter: str
    rank: int

    def __post_init__(self):
        letter = self.letter.upper() if isinstance(self.letter, str) else self.letter
        object.__setattr__(self, "letter", letter)
        if letter not in _MIN_RANK and letter not in _EXCEPTIONAL:
            raise ComputationError(
                "root_type_error", ErrorCategory.ROOT_TYPE,
                letter=letter, rank=self.rank, detail="letter must be one of A, B, C, D, E, F, G",
            )
        if letter in _EXCEPTIONAL and self.rank not in _EXCEPTIONAL[letter]:
            allowed = ", ".join(str(r) for r in sorted(_EXCEPTIONAL[letter]))
            raise ComputationError(
                "root_type_error", ErrorCategory.ROOT_TYPE,
                letter=letter, rank=self.rank, detail=f"rank must be one of {allowed}",
            )
        if letter in _MIN_RANK and self.rank < _MIN_RANK[letter]:
            raise ComputationError(
                "root_type_error", ErrorCategory.ROOT_TYPE,
                letter=letter, rank=self.rank, detail=f"rank must be at least {_MIN_RANK[letter]}",
            )

    def __str__(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def exponents(self) -> Tuple[int, ...]:
        return exponents_and_coxeter(self)[0]

    @property
    def coxeter_number(self) -> int:
        return exponents_and_coxeter(self)[1]


# Classical series, conventional non-overlapping ranks
_MIN_RANK: Dict[str, int] = {"A": 1, "B": 2, "C": 3, "D": 4}

_EXCEPTIONAL: Dict[str, Dict[int, Tuple[Tuple[int, ...], int]]] = {
    "E": {
        6: ((1, 4, 5, 7, 8, 11), 12),
        7: ((1, 5, 7, 9, 11, 13, 17), 18),
        8: ((1, 7, 11, 13, 17, 19, 23, 29), 30),
    },
    "F": {4: ((1, 5, 7, 11), 12)},
    "G": {2: ((1, 5), 6)},
}

WEYL_GROUP_ORDERS: Dict[Tuple[str, int], int] = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


def exponents_and_coxeter(root_type: RootSystemType) -> Tuple[Tuple[int, ...], int]:
    n = root_type.rank
    letter = root_type.letter
    if letter == "A":
        return tuple(range(1, n + 1)), n + 1
    if letter in ("B", "C"):
        return tuple(2 * i - 1 for i in range(1, n + 1)), 2 * n
    if letter == "D":
        return tuple(sorted([2 * i - 1 for i in range(1, n)] + [n - 1])), 2 * n - 2
    return _EXCEPTIONAL[letter][n]


def weyl_group_order(root_type: RootSystemType) -> int:
    n = root_type.rank
    letter = root_type.letter
    if letter == "A":
        return factorial(n + 1)
    if letter in ("B", "C"):
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    return WEYL_GROUP_ORDERS[(letter, n)]


def catalan_classic(n: int) -> int:
    if n < 0:
        raise range_error("n", n, "n >= 0")
    return exact_quotient(binomial(2 * n, n), n + 1, f"Cat_{n}")


def narayana_classic(n: int, k: int) -> int:
    """N_{n,k} = binom(n,k) binom(n,k+1) / n; N_{n,n} = 0."""
    if n < 1:
        raise range_error("n", n, "n >= 1")
    if not 0 <= k <= n:
        raise range_error("k", k, f"0 <= k <= {n}")
    return exact_quotient(binomial(n, k) * binomial(n, k + 1), n, f"N_{{{n},{k}}}")


def narayana_typed(root_letter: str, n: int, k: int) -> int:
    if n < 0:
        raise range_error("n", n, "n >= 0")
    if not 0 <= k <= n:
        raise range_error("k", k, f"0 <= k <= {n}")
    if root_letter == "A":
        return narayana_classic(n + 1, k)
    if root_letter == "B":
        return binomial(n, k) ** 2
    raise ComputationError("unknown_family", ErrorCategory.USAGE, family=root_letter)


def catalan_weyl(root_type: RootSystemType) -> int:
    exponents, h = exponents_and_coxeter(root_type)
    value = Fraction(1)
    for e in exponents:
        value *= Fraction(e + h + 1, e + 1)
    return as_integer(value, f"Cat_{root_type}")


def catalan_ddim(d: int, n: int) -> int:
    """C_{d,n} = (dn)! prod_{i<d} i!/(n+i)!."""
    if d < 1:
        raise range_error("d", d, "d >= 1")
    if n < 0:
        raise range_error("n", n, "n >= 0")
    numerator = factorial(d * n)
    denominator = 1
    for i in range(d):
        numerator *= factorial(i)
        denominator *= factorial(n + i)
    return exact_quotient(numerator, denominator, f"C_{{{d},{n}}}")


def narayana_ddim(d: int, n: int, k: int) -> int:
    """d-dimensional Narayana number N_{d,n,k} by the alternating sum, in exact rationals."""
    if d < 2:
        raise range_error("d", d, "d >= 2")
    if n < 1:
        raise range_error("n", n, "n >= 1")
    top = (d - 1) * (n - 1)
    if not 0 <= k <= top:
        raise range_error("k", k, f"0 <= k <= {top}")

    total = Fraction(0)
    for j in range(k + 1):
        ratio = Fraction(1)
        for i in range(d):
            ratio *= Fraction(binomial(n + i + j, n), binomial(n + i, n))
        sign = -1 if (k - j) % 2 else 1
        total += sign * binomial(d * n + 1, k - j) * ratio

    value = as_integer(total, f"N_{{{d},{n},{k}}}")
    if value < 0:
        raise ComputationError(
            "invariant_violation", ErrorCategory.INVARIANT,
            what=f"N_{{{d},{n},{k}}}", detail=f"negative value {value}",
        )
    return value


def narayana_ddim_a(d: int, n: int, k: int) -> int:
    """N_A(d,n,k) = N_{d,n+1,k} for 0 <= k <= (d-1)n."""
    if n < 0:
        raise range_error("n", n, "n >= 0")
    return narayana_ddim(d, n + 1, k)


def narayana_row(family: NarayanaFamily, n: int, d: Optional[int] = None) -> NarayanaRow:
    family = NarayanaFamily(family)
    if family is NarayanaFamily.CLASSIC:
        if n < 1:
            raise range_error("n", n, "n >= 1")
        coefficients = [narayana_classic(n, k) for k in range(n)]
    elif family in (NarayanaFamily.A, NarayanaFamily.B):
        if n < 0:
            raise range_error("n", n, "n >= 0")
        coefficients = [narayana_typed(family.value, n, k) for k in range(n + 1)]
    elif family is NarayanaFamily.DDIM:
        if d is None or d < 2:
            raise range_error("d", d, "d >= 2")
        if n < 1:
            raise range_error("n", n, "n >= 1")
        coefficients = [narayana_ddim(d, n, k) for k in range((d - 1) * (n - 1) + 1)]
    else:
        if d is None or d < 2:
            raise range_error("d", d, "d >= 2")
        if n < 0:
            raise range_error("n", n, "n >= 0")
        coefficients = [narayana_ddim_a(d, n, k) for k in range((d - 1) * n + 1)]
    return NarayanaRow(family=family, n=n, coefficients=tuple(coefficients), d=d)


def grassmannian_h_vector(d: int, n: int) -> Tuple[int, ...]:
    """Expected numerator of the Grassmannian cone X(d, n+d+1): [N_A(d,n,i)].

    d = 1 is projective space, numerator 1.
    """
    if d < 1:
        raise range_error("d", d, "d >= 1")
    if d == 1:
        return (1,)
    return narayana_row(NarayanaFamily.DDIM_A, n, d).coefficients


def catalan_rowsum_terms(n: int) -> Tuple[int, int, int]:
    """The three stages of the telescoping classic row-sum derivation.

    Returns (sum of binom(n-1,k)binom(n+1,k+1) - binom(n,k)binom(n,k+1),
    binom(2n,n) - binom(2n,n-1), binom(2n,n)/(n+1)).
    """
    if n < 1:
        raise range_error("n", n, "n >= 1")
    telescoped = sum(
        binomial(n - 1, k) * binomial(n + 1, k + 1) - binomial(n, k) * binomial(n, k + 1)
        for k in range(n + 1)
    )
    return telescoped, binomial(2 * n, n) - binomial(2 * n, n - 1), catalan_classic(n)
