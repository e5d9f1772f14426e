from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from endocount.burnside import permutation_cycle_type
from endocount.errors import DomainError
from endocount.partitions import Partition, class_size, cycle_multiplicities, enumerate_partitions


def brute_partitions(n):
    out = set()
    for k in range(1, n + 1):
        for seq in product(range(1, n + 1), repeat=k):
            if sum(seq) == n and list(seq) == sorted(seq):
                out.add(seq)
    return out


def test_partitions_of_four():
    parts = [p.parts for p in enumerate_partitions(4)]
    assert set(parts) == {(1, 1, 1, 1), (1, 1, 2), (2, 2), (1, 3), (4,)}
    assert parts == sorted(parts)


def test_partitions_of_one():
    assert enumerate_partitions(1) == [Partition((1,))]


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_match_brute_force(n):
    parts = [p.parts for p in enumerate_partitions(n)]
    assert len(parts) == len(set(parts))
    assert set(parts) == brute_partitions(n)


def test_partition_count_six():
    assert len(enumerate_partitions(6)) == 11 == len(brute_partitions(6))


@pytest.mark.parametrize("bad", [0, -3])
def test_partitions_reject_nonpositive(bad):
    with pytest.raises(DomainError):
        enumerate_partitions(bad)


@pytest.mark.parametrize("parts", [(), (2, 1), (0, 1), (1, -1)])
def test_partition_invariants(parts):
    with pytest.raises(DomainError):
        Partition(parts)


def test_cycle_multiplicities():
    assert cycle_multiplicities(Partition((1, 2, 2))) == {1: 1, 2: 2}
    assert cycle_multiplicities(Partition((5,))) == {5: 1}
    assert cycle_multiplicities(Partition((1, 1, 1, 1))) == {1: 4}


@given(st.integers(1, 12))
def test_multiplicities_recover_n(n):
    for p in enumerate_partitions(n):
        mults = cycle_multiplicities(p)
        assert sum(j * c for j, c in mults.items()) == n
        assert all(c > 0 for c in mults.values())


@pytest.mark.parametrize("parts,size", [
    ((1, 3), 8), ((1, 1, 2), 6), ((2, 2), 3), ((4,), 6), ((1, 1, 1, 1), 1),
])
def test_class_sizes_n4(parts, size):
    assert class_size(Partition(parts)) == size


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes_against_permutation_census(n):
    census = {}
    for g in permutations(range(n)):
        ctype = permutation_cycle_type(g)
        census[ctype] = census.get(ctype, 0) + 1
    assert census == {p: class_size(p) for p in enumerate_partitions(n)}


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(p) for p in enumerate_partitions(n)) == factorial(n)
    assert class_size(Partition((n,))) == factorial(n - 1)
    assert class_size(Partition((1,) * n)) == 1
