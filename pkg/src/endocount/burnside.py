"""Burnside counts of m-endomorphism classes of free semigroups and monoids.

Every count is an exact Python integer.  The three regimes for the length
of a generator's image are captured by :class:`Variant`.
"""
from __future__ import annotations

import enum
from itertools import permutations
from math import factorial

from .errors import BudgetExceeded, ConsistencyError, DomainError
from .partitions import Partition, class_size, cycle_multiplicities, enumerate_partitions

NAIVE_MAX_N = 8


class Variant(str, enum.Enum):
    SEMIGROUP = "semigroup"  # image lengths 1..m
    UNIFORM = "uniform"  # image length exactly m
    MONOID = "monoid"  # image lengths 0..m

    def lengths(self, m: int) -> range:
        if self is Variant.SEMIGROUP:
            return range(1, m + 1)
        if self is Variant.UNIFORM:
            return range(m, m + 1)
        return range(0, m + 1)

    def __str__(self):
        return self.value


def as_variant(v) -> Variant:
    try:
        return v if isinstance(v, Variant) else Variant(v)
    except ValueError:
        raise DomainError(f"unknown variant {v!r}; expected one of "
                          f"{', '.join(x.value for x in Variant)}") from None


def _check_nm(n: int, m: int):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")


def divisor_weight(partition: Partition, cycle_length: int) -> int:
    """Number of letters lying in cycles whose length divides ``cycle_length``."""
    mults = cycle_multiplicities(partition)
    if cycle_length not in mults:
        raise DomainError(f"{cycle_length} is not a cycle length of {partition}")
    return sum(j * c for j, c in mults.items() if cycle_length % j == 0)


def cycle_weight(s: int, m: int, variant) -> int:
    """Number of admissible words over an ``s``-letter alphabet.

    semigroup: s + s^2 + ... + s^m; uniform: s^m; monoid: 1 + s + ... + s^m.
    """
    variant = as_variant(variant)
    if s < 0:
        raise DomainError(f"alphabet size must be nonnegative, got {s}")
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if variant is Variant.UNIFORM:
        return s**m
    if s < 2:
        return sum(s**k for k in variant.lengths(m))
    lo = 1 if variant is Variant.SEMIGROUP else 0
    total, rem = divmod(s ** (m + 1) - s**lo, s - 1)
    if rem:
        raise ConsistencyError(f"geometric sum for s={s}, m={m} not exact")
    return total


def fixed_map_count(partition: Partition, m: int, variant) -> int:
    """Number of maps f: D -> R fixed by any permutation of the given cycle type."""
    variant = as_variant(variant)
    count = 1
    for k in partition.parts:
        count *= cycle_weight(divisor_weight(partition, k), m, variant)
    return count


def total_maps(n: int, m: int, variant) -> int:
    """Size of the set of all maps from an n-letter alphabet into admissible words."""
    variant = as_variant(variant)
    _check_nm(n, m)
    return sum(n**k for k in variant.lengths(m)) ** n


def _exact_average(total: int, n: int) -> int:
    q, r = divmod(total, factorial(n))
    if r:
        raise ConsistencyError(
            f"Burnside sum {total} is not divisible by {n}! (remainder {r})")
    return q


def count_classes(n: int, m: int, variant="semigroup") -> int:
    """Number of m-endomorphisms up to combinatorial equivalence.

    Sums over cycle types, weighting each by the size of its conjugacy class.

    >>> count_classes(3, 2)
    304
    >>> count_classes(2, 2, "uniform")
    10
    """
    variant = as_variant(variant)
    _check_nm(n, m)
    total = sum(class_size(p) * fixed_map_count(p, m, variant)
                for p in enumerate_partitions(n))
    return _exact_average(total, n)


def permutation_cycle_type(g) -> Partition:
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        k, d = 0, start
        while not seen[d]:
            seen[d] = True
            d = g[d]
            k += 1
        lengths.append(k)
    return Partition(tuple(sorted(lengths)))


def count_classes_naive(n: int, m: int, variant="semigroup", max_n: int = NAIVE_MAX_N) -> int:
    """Burnside average taken over every one of the n! permutations explicitly."""
    variant = as_variant(variant)
    _check_nm(n, m)
    if n > max_n:
        raise BudgetExceeded(f"naive Burnside sum over Sym({n})", n, max_n)
    cache = {}
    total = 0
    for g in permutations(range(n)):
        ctype = permutation_cycle_type(g)
        if ctype not in cache:
            cache[ctype] = fixed_map_count(ctype, m, variant)
        total += cache[ctype]
    return _exact_average(total, n)
