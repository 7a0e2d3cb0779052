"""Integer partitions, hook+column shapes and 2-signs.

Partitions are tuples of weakly decreasing positive integers.  Everything
else in the package is indexed by them, so the type is a thin ``tuple``
subclass: hashable, ordered, cheap.

Rational scalars are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # skips validation; callers guarantee the invariant
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return format_partition(self)


_PART_RE = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``[6,2,2,2,1]`` or the exponent form ``[6,2^3,1]``.

    The brackets are optional and ``[]`` is the empty partition.
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return Partition()
    parts: list[int] = []
    for chunk in body.split(","):
        m = _PART_RE.match(chunk)
        if m is None:
            raise ValueError(f"bad partition entry {chunk!r} in {text!r}")
        value, reps = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * reps)
    return Partition(parts)


def format_partition(lam: Iterable[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition._trusted(())
    return Partition._trusted(
        tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


def partition_sum(lam, mu) -> Partition:
    """Componentwise sum, padding the shorter partition with zeros."""
    n = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (n - len(lam))
    b = tuple(mu) + (0,) * (n - len(mu))
    return Partition._trusted(tuple(x + y for x, y in zip(a, b)))


def partition_union(lam, mu) -> Partition:
    return Partition._trusted(tuple(sorted(tuple(lam) + tuple(mu), reverse=True)))


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition._trusted(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition._trusted((first,) + rest)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def multiplicities(lam) -> Counter:
    return Counter(lam)


def z_of(lam) -> int:
    """Centralizer order prod_i i^{m_i} m_i!."""
    z = 1
    for part, m in Counter(lam).items():
        z *= part ** m * factorial(m)
    return z


# -- beta-sets ---------------------------------------------------------------
# A partition padded to length L corresponds to the bead positions
# {lam_i + L - i}.  Moving a bead by k encodes adding or removing a
# border strip of size k; the beads jumped over count the strip's height.

def _beta_set(lam, length: int) -> list[int]:
    padded = tuple(lam) + (0,) * (length - len(lam))
    return [padded[i] + length - 1 - i for i in range(length)]


def _from_beta(beads, length: int) -> Partition:
    beads = sorted(beads, reverse=True)
    parts = [b - (length - 1 - i) for i, b in enumerate(beads)]
    return Partition._trusted(tuple(p for p in parts if p > 0))


def remove_strips(lam, k: int) -> list[tuple[Partition, int]]:
    """All (lam minus a border strip of size k, (-1)^height)."""
    length = len(lam)
    beads = _beta_set(lam, length)
    occupied = set(beads)
    out = []
    for b in beads:
        if b - k >= 0 and (b - k) not in occupied:
            between = sum(1 for c in beads if b - k < c < b)
            new = [c for c in beads if c != b] + [b - k]
            out.append((_from_beta(new, length), -1 if between % 2 else 1))
    return out


def add_strips(lam, k: int) -> list[tuple[Partition, int]]:
    """All (lam plus a border strip of size k, (-1)^height)."""
    length = len(lam) + k
    beads = _beta_set(lam, length)
    occupied = set(beads)
    out = []
    for b in beads:
        if (b + k) not in occupied:
            between = sum(1 for c in beads if b < c < b + k)
            new = [c for c in beads if c != b] + [b + k]
            out.append((_from_beta(new, length), -1 if between % 2 else 1))
    return out


def two_sign(lam) -> Optional[int]:
    """(-1)^(number of vertical dominoes) in a domino tiling of ``lam``.

    Dominoes are peeled off the rim greedily.  Returns None when the
    diagram has no domino tiling (nonempty 2-core).
    """
    sign = 1
    shape = Partition._trusted(tuple(lam))
    while shape:
        strips = remove_strips(shape, 2)
        if not strips:
            return None
        shape, s = strips[0]
        sign *= s
    return sign


# -- hook+column shapes ------------------------------------------------------

@dataclass(frozen=True)
class HookColumnShape:
    """The partition (alpha, 2^beta, 1^gamma).

    ``alpha`` is always the literal first part, so ``(1,1,1,1,1)`` reads as
    alpha=1, beta=0, gamma=4 and ``(2,2,1)`` as alpha=2, beta=1, gamma=1.
    """

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if self.beta < 0 or self.gamma < 0:
            raise ValueError(f"negative multiplicity in {self}")
        if not (self.alpha >= 2 or (self.alpha == 1 and self.beta == 0)):
            raise ValueError(f"{self} is not a valid hook+column shape")

    @property
    def weight(self) -> int:
        return self.alpha + 2 * self.beta + self.gamma

    def partition(self) -> Partition:
        return Partition._trusted((self.alpha,) + (2,) * self.beta + (1,) * self.gamma)


def hook_column_decompose(lam) -> Optional[HookColumnShape]:
    lam = tuple(lam)
    if not lam or any(p > 2 for p in lam[1:]):
        return None
    rest = lam[1:]
    return HookColumnShape(lam[0], rest.count(2), rest.count(1))


def is_hook_column(lam) -> bool:
    return len(lam) > 0 and (len(lam) == 1 or lam[1] <= 2)


def hook_column(n: int, beta: int, gamma: int) -> Optional[Partition]:
    """The partition (n - 2 beta - gamma, 2^beta, 1^gamma), or None if invalid."""
    alpha = n - 2 * beta - gamma
    if beta < 0 or gamma < 0:
        return None
    if alpha >= 2 or (alpha == 1 and beta == 0):
        return Partition._trusted((alpha,) + (2,) * beta + (1,) * gamma)
    return None


def hook_column_betas(n: int, gamma: int) -> range:
    """The beta values for which (n - 2 beta - gamma, 2^beta, 1^gamma) is a partition."""
    if n - gamma < 1:
        return range(0)
    if n - gamma == 1:
        return range(1)
    return range((n - gamma - 2) // 2 + 1)


def hook_columns_of(n: int) -> Iterator[Partition]:
    """Every hook+column partition of n, in decreasing lexicographic order."""
    found = [hook_column(n, b, g)
             for g in range(n) for b in hook_column_betas(n, g)]
    yield from sorted(found, reverse=True)
