"""Integer partitions of n, viewed as cycle types of permutations of n letters."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from .errors import ConsistencyError, DomainError


@dataclass(frozen=True, order=True)
class Partition:
    """A cycle type: a nonempty nondecreasing tuple of positive cycle lengths."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise DomainError("a partition needs at least one part")
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise DomainError(f"parts must be positive integers: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts must be nondecreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"


@lru_cache(maxsize=None)
def _partitions(n: int, smallest: int) -> Tuple[Tuple[int, ...], ...]:
    # nondecreasing sequences summing to n whose first part is >= smallest
    if n == 0:
        return ((),)
    out = []
    for first in range(smallest, n + 1):
        rest = n - first
        if rest and rest < first:
            continue
        for tail in _partitions(rest, first):
            out.append((first,) + tail)
    return tuple(out)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` in lexicographic order of their parts.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(1, 1, 1, 1), (1, 1, 2), (1, 3), (2, 2), (4,)]
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return [Partition(p) for p in _partitions(n, 1)]


def cycle_multiplicities(partition: Partition) -> Dict[int, int]:
    """Map each cycle length j to the number c(j) of cycles of that length."""
    return dict(sorted(Counter(partition.parts).items()))


def class_size(partition: Partition) -> int:
    """Number of permutations of ``partition.n`` letters with this cycle type."""
    n = partition.n
    denom = 1
    for j, c in cycle_multiplicities(partition).items():
        denom *= factorial(c) * j**c
    size, rem = divmod(factorial(n), denom)
    if rem:
        raise ConsistencyError(f"{n}! not divisible by centralizer order {denom}")
    return size
