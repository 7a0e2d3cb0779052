"""The r-flip involution on hook+column partitions and flip-symmetry."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .partitions import (
    Partition,
    hook_column,
    hook_column_betas,
    hook_column_decompose,
)


@dataclass(frozen=True)
class HCSequence:
    """Sigma(f, gamma): entries[beta] = [s_(n-2beta-gamma, 2^beta, 1^gamma)] f."""

    degree: int
    gamma: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        expected = len(hook_column_betas(self.degree, self.gamma))
        if len(self.entries) != expected:
            raise ValueError(f"degree {self.degree}, gamma {self.gamma} has {expected} "
                             f"valid betas, got {len(self.entries)} entries")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, beta):
        return self.entries[beta]

    def partitions(self) -> list[Partition]:
        return [hook_column(self.degree, b, self.gamma) for b in range(len(self.entries))]

    def core(self) -> tuple:
        """Entries with leading and trailing zeros stripped."""
        e = list(self.entries)
        while e and e[-1] == 0:
            e.pop()
        start = 0
        while start < len(e) and e[start] == 0:
            start += 1
        return tuple(e[start:])

    def to_json(self) -> str:
        return json.dumps({"degree": self.degree, "gamma": self.gamma,
                           "entries": list(self.entries)})

    @classmethod
    def from_json(cls, text: str) -> "HCSequence":
        data = json.loads(text)
        return cls(data["degree"], data["gamma"], tuple(data["entries"]))

    def to_csv_row(self) -> str:
        return ",".join(str(v) for v in (self.degree, self.gamma, *self.entries))


def hc_sequence(f, gamma: int) -> HCSequence:
    n = f.degree
    return HCSequence(n, gamma, tuple(f[hook_column(n, b, gamma)]
                                      for b in hook_column_betas(n, gamma)))


class FlipResult(NamedTuple):
    image: Partition
    delta: int


def _check_offset(r: int, extended: bool):
    if r < 0:
        raise ValueError("flip offset must be non-negative")
    if r < 2 and not extended:
        raise ValueError(f"offset {r} < 2 needs extended mode")


def flip(r: int, lam, extended: bool = False) -> Optional[FlipResult]:
    """(r + 2 delta + gamma, 2^beta, 1^gamma) -> (r + 2 beta + gamma, 2^delta, 1^gamma).

    None where the flip is undefined.  Offsets 0 and 1 are only accepted
    with ``extended=True``.
    """
    _check_offset(r, extended)
    shape = hook_column_decompose(lam)
    if shape is None:
        return None
    twice_delta = shape.alpha - r - shape.gamma
    if twice_delta < 0 or twice_delta % 2:
        return None
    delta = twice_delta // 2
    first = r + 2 * shape.beta + shape.gamma
    if not (first >= 2 or (first == 1 and delta == 0)):
        return None
    image = Partition._trusted((first,) + (2,) * delta + (1,) * shape.gamma)
    return FlipResult(image, delta)


def _transpose_tableau(rows: list[list[int]]) -> Optional[list[list[int]]]:
    lengths = [len(row) for row in rows]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return None
    if not rows:
        return []
    return [[rows[i][j] for i in range(len(rows)) if len(rows[i]) > j]
            for j in range(lengths[0])]


def flip_via_tiling(r: int, lam) -> Optional[FlipResult]:
    """The r-flip as a tiled transposition.

    Row one is cut into a 1 x r tile, delta dominoes and gamma unit cells;
    every other row is a single tile.  Collapsing tiles to their widths gives
    a tableau; its transpose re-expands into the image.  Undefined for r < 2.
    """
    if r < 2:
        return None
    shape = hook_column_decompose(lam)
    if shape is None:
        return None
    twice_delta = shape.alpha - r - shape.gamma
    if twice_delta < 0 or twice_delta % 2:
        return None
    delta = twice_delta // 2
    tableau = [[r] + [2] * delta + [1] * shape.gamma]
    tableau += [[row] for row in Partition(lam)[1:]]
    flipped = _transpose_tableau(tableau)
    if flipped is None:
        return None
    widths = [sum(row) for row in flipped]
    if any(a < b for a, b in zip(widths, widths[1:])):
        return None
    return FlipResult(Partition(widths), delta)


@dataclass(frozen=True)
class FlipCheck:
    symmetric: bool
    witness: Optional[Partition] = None

    def __bool__(self):
        return self.symmetric


def is_flip_symmetric(f, r: int, extended: bool = False) -> FlipCheck:
    """Every hook+column in supp(f) has a defined r-flip with the same coefficient.

    Support members that are not hook+columns are ignored.
    """
    for lam, c in f.items():
        if hook_column_decompose(lam) is None:
            continue
        image = flip(r, lam, extended)
        if image is None or f[image.image] != c:
            return FlipCheck(False, lam)
    return FlipCheck(True)


def find_offsets(f, extended: bool = False) -> list[int]:
    """Every offset r in [lo, max first part of the hc support] with f flip-symmetric.

    ``lo`` is 2, or 0 with ``extended=True`` (offsets below 2 are extended-mode
    only).  A function without hook+column support returns [].
    """
    firsts = [lam[0] for lam in f.support() if hook_column_decompose(lam) is not None]
    if not firsts:
        return []
    lo = 0 if extended else 2
    return [r for r in range(lo, max(firsts) + 1) if is_flip_symmetric(f, r, extended)]
