"""Type A_m root data: positive roots, dominant weights in Dynkin labels, duals, pole orders."""
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence, Tuple, Union

from core.logging_system import ComputationError, ErrorCategory, range_error


@dataclass(frozen=True)
class DominantWeight:
    """Coefficients of a dominant weight of A_m in the fundamental weight basis."""
    labels: Tuple[int, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise range_error("rank", 0, "rank >= 1")
        if any(label < 0 for label in labels):
            raise ComputationError("negative_label", ErrorCategory.DOMAIN, labels=list(labels))

    @classmethod
    def of_rank(cls, rank: int, labels: Iterable[int]) -> "DominantWeight":
        labels = tuple(labels)
        if len(labels) != rank:
            raise ComputationError("rank_mismatch", ErrorCategory.RANGE, rank=rank, count=len(labels))
        return cls(labels)

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def is_zero(self) -> bool:
        return not any(self.labels)

    def scale(self, k: int) -> "DominantWeight":
        if k < 0:
            raise range_error("k", k, "k >= 0")
        return DominantWeight(tuple(k * label for label in self.labels))

    def __str__(self) -> str:
        return "[" + ",".join(str(label) for label in self.labels) + "]"


@dataclass(frozen=True, order=True)
class PositiveRootA:
    """alpha_a + alpha_{a+1} + ... + alpha_b."""
    a: int
    b: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b:
            raise range_error("root", (self.a, self.b), "1 <= a <= b")

    @property
    def height(self) -> int:
        return self.b - self.a + 1


WeightLike = Union[DominantWeight, Sequence[int]]


def as_weight(w: WeightLike) -> DominantWeight:
    return w if isinstance(w, DominantWeight) else DominantWeight(tuple(w))


def fundamental_weight(rank: int, i: int) -> DominantWeight:
    """omega_i of A_rank."""
    if rank < 1:
        raise range_error("rank", rank, "rank >= 1")
    if not 1 <= i <= rank:
        raise range_error("i", i, f"1 <= i <= {rank}")
    return DominantWeight(tuple(1 if j == i else 0 for j in range(1, rank + 1)))


def highest_root(rank: int) -> DominantWeight:
    """theta = omega_1 + omega_rank; on A_1 this is 2 omega_1."""
    if rank < 1:
        raise range_error("rank", rank, "rank >= 1")
    labels = [0] * rank
    labels[0] += 1
    labels[-1] += 1
    return DominantWeight(tuple(labels))


def zero_weight(rank: int) -> DominantWeight:
    if rank < 1:
        raise range_error("rank", rank, "rank >= 1")
    return DominantWeight((0,) * rank)


@lru_cache(maxsize=None)
def positive_roots(rank: int) -> Tuple[PositiveRootA, ...]:
    if rank < 1:
        raise range_error("rank", rank, "rank >= 1")
    return tuple(PositiveRootA(a, b) for a in range(1, rank + 1) for b in range(a, rank + 1))


def pairing(w: WeightLike, shift: bool, root: PositiveRootA) -> int:
    """<w + rho, alpha^vee> when shift is on, <w, alpha^vee> otherwise."""
    w = as_weight(w)
    if root.b > w.rank:
        raise ComputationError("root_out_of_range", ErrorCategory.RANGE, a=root.a, b=root.b, rank=w.rank)
    value = sum(w.labels[root.a - 1:root.b])
    return value + root.height if shift else value


def _prefix_sums(labels: Sequence[int]) -> Tuple[int, ...]:
    return (0,) + tuple(accumulate(labels))


def shifted_pairings(w: WeightLike) -> Tuple[Tuple[int, int], ...]:
    """(<w+rho, alpha>, <rho, alpha>) for every positive root, via prefix sums."""
    w = as_weight(w)
    prefix = _prefix_sums(w.labels)
    return tuple(
        (prefix[root.b] - prefix[root.a - 1] + root.height, root.height)
        for root in positive_roots(w.rank)
    )


def dual_weight(w: WeightLike) -> DominantWeight:
    """Highest weight of the dual representation: label reversal in type A."""
    w = as_weight(w)
    return DominantWeight(tuple(reversed(w.labels)))


def pole_order(w: WeightLike) -> int:
    """1 + number of positive roots on which w pairs nontrivially."""
    w = as_weight(w)
    if w.is_zero:
        raise ComputationError("zero_weight", ErrorCategory.DOMAIN)
    prefix = _prefix_sums(w.labels)
    support = sum(
        1 for root in positive_roots(w.rank) if prefix[root.b] - prefix[root.a - 1] > 0
    )
    return support + 1
