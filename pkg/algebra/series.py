"""Exact univariate polynomials, truncated power series and Hilbert series numerators."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Tuple, Union

from loguru import logger

from algebra.exact import Number, as_integer, binomial, normalize
from core.config import settings
from core.logging_system import ComputationError, ErrorCategory, range_error


def _canonical(coefficients: Iterable[Number]) -> Tuple[Number, ...]:
    values = [normalize(c) for c in coefficients]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, index = degree; the zero polynomial has no coefficients."""
    coefficients: Tuple[Number, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _canonical(self.coefficients))

    @classmethod
    def constant(cls, value: Number) -> "Polynomial":
        return cls((value,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Number:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __call__(self, x: Number) -> Number:
        value: Number = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return normalize(value)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(tuple(self[i] + other[i] for i in range(size)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return Polynomial(tuple(c * other for c in self.coefficients))

    def __rmul__(self, other):
        return Polynomial(tuple(other * c for c in self.coefficients))

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise range_error("exponent", exponent, "exponent >= 0")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coefficients)

    def integer_coefficients(self) -> Tuple[int, ...]:
        return tuple(as_integer(c, "polynomial coefficient") for c in self.coefficients)


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_K t^K + O(t^{K+1}); nothing past K is ever read."""
    order: int
    coefficients: Tuple[Number, ...]

    def __post_init__(self):
        if self.order < 0:
            raise range_error("order", self.order, "order >= 0")
        coefficients = tuple(normalize(c) for c in self.coefficients)
        if len(coefficients) != self.order + 1:
            raise ComputationError(
                "invariant_violation", ErrorCategory.INVARIANT,
                what="TruncatedSeries", detail=f"{len(coefficients)} coefficients for order {self.order}",
            )
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0,) * (order + 1))

    def __getitem__(self, i: int) -> Number:
        if not 0 <= i <= self.order:
            raise range_error("index", i, f"0 <= index <= {self.order}")
        return self.coefficients[i]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ComputationError("insufficient_order", ErrorCategory.RANGE, working=self.order, needed=order + 1)
        return TruncatedSeries(order, self.coefficients[:order + 1])

    def _align(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = self._align(other)
        return TruncatedSeries(order, tuple(self.coefficients[i] + other.coefficients[i] for i in range(order + 1)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coefficients))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (TruncatedSeries, Polynomial)):
            return mul(self, other)
        return TruncatedSeries(self.order, tuple(c * other for c in self.coefficients))

    def __rmul__(self, other):
        if isinstance(other, Polynomial):
            return mul(other, self)
        return TruncatedSeries(self.order, tuple(other * c for c in self.coefficients))

    def divide(self, divisor: Number) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(Fraction(c) / divisor for c in self.coefficients))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coefficients)


@dataclass(frozen=True)
class HilbertSeries:
    """numerator(t) / (1 - t)^pole_order."""
    numerator: Polynomial
    pole_order: int

    def __post_init__(self):
        if self.pole_order < 1:
            raise range_error("pole_order", self.pole_order, "pole_order >= 1")
        if not self.numerator.is_integral():
            raise ComputationError(
                "invariant_violation", ErrorCategory.INVARIANT,
                what="HilbertSeries", detail=f"non-integral numerator {list(self.numerator.coefficients)}",
            )
        if self.numerator.degree >= self.pole_order:
            raise ComputationError(
                "invariant_violation", ErrorCategory.INVARIANT,
                what="HilbertSeries", detail=f"numerator degree {self.numerator.degree} >= pole order {self.pole_order}",
            )

    @property
    def h_vector(self) -> Tuple[int, ...]:
        return self.numerator.integer_coefficients()

    @property
    def degree(self) -> int:
        """Numerator at t = 1: the degree of the projective variety."""
        return self.numerator(1)

    @property
    def dimension(self) -> int:
        """Krull dimension of the graded ring."""
        return self.pole_order

    def is_coordinate_ring(self) -> bool:
        """Constant term 1 and a nonnegative h-vector."""
        return self.numerator[0] == 1 and all(c >= 0 for c in self.numerator.coefficients)


def geometric_pole(m: int, order: int) -> TruncatedSeries:
    """(1 - t)^{-m} = sum binom(m-1+j, j) t^j."""
    if m < 1:
        raise range_error("m", m, "m >= 1")
    if order < 0:
        raise range_error("order", order, "order >= 0")
    return TruncatedSeries(order, tuple(binomial(m - 1 + j, j) for j in range(order + 1)))


def derive(s: TruncatedSeries) -> TruncatedSeries:
    """The operator f -> f'; the order drops by one."""
    if s.order < 1:
        raise range_error("order", s.order, "order >= 1")
    return TruncatedSeries(s.order - 1, tuple((j + 1) * s.coefficients[j + 1] for j in range(s.order)))


def shift_t(s: TruncatedSeries, cap: Optional[int] = None) -> TruncatedSeries:
    """The operator f -> t f; the order grows by one up to the engine cap."""
    cap = settings.MAX_SERIES_ORDER if cap is None else cap
    shifted = TruncatedSeries(s.order + 1, (0,) + s.coefficients)
    return shifted.truncate(cap) if shifted.order > cap else shifted


def mul(
    a: Union[TruncatedSeries, Polynomial],
    b: Union[TruncatedSeries, Polynomial],
) -> Union[TruncatedSeries, Polynomial]:
    """Cauchy product; series results are truncated to the smaller order."""
    if isinstance(a, Polynomial) and isinstance(b, Polynomial):
        if a.is_zero or b.is_zero:
            return Polynomial()
        product = [0] * (len(a.coefficients) + len(b.coefficients) - 1)
        for i, x in enumerate(a.coefficients):
            if x == 0:
                continue
            for j, y in enumerate(b.coefficients):
                product[i + j] += x * y
        return Polynomial(tuple(product))

    order = min(s.order for s in (a, b) if isinstance(s, TruncatedSeries))
    left = [a[i] for i in range(order + 1)]
    right = [b[i] for i in range(order + 1)]
    product = [0] * (order + 1)
    for i, x in enumerate(left):
        if x == 0:
            continue
        for j in range(order + 1 - i):
            product[i + j] += x * right[j]
    return TruncatedSeries(order, tuple(product))


def reconstruct_numerator(coeff_stream: Callable[[int], int], pole_order: int) -> HilbertSeries:
    """Numerator P with sum coeff_stream(k) t^k = P(t) / (1-t)^D.

    p_i = sum_{j <= min(i, D)} (-1)^j binom(D, j) coeff_stream(i - j). For a stream
    that is a polynomial of degree D-1 in k, p_D and p_{D+1} vanish; both are checked.
    """
    if pole_order < 1:
        raise range_error("pole_order", pole_order, "pole_order >= 1")
    values = [coeff_stream(k) for k in range(pole_order + 2)]
    p = [
        sum((-1) ** j * binomial(pole_order, j) * values[i - j] for j in range(min(i, pole_order) + 1))
        for i in range(pole_order + 2)
    ]
    if p[pole_order] != 0 or p[pole_order + 1] != 0:
        raise ComputationError(
            "pole_order_mismatch", ErrorCategory.POLE_ORDER,
            pole_order=pole_order, p_d=p[pole_order], p_d1=p[pole_order + 1], next_index=pole_order + 1,
        )
    logger.debug(f"Reconstructed numerator {p[:pole_order]} over (1-t)^{pole_order}")
    return HilbertSeries(Polynomial(tuple(p[:pole_order])), pole_order)


def expand(h: HilbertSeries, order: int) -> TruncatedSeries:
    return mul(h.numerator, geometric_pole(h.pole_order, order))
