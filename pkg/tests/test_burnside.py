from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from endocount.burnside import (
    Variant,
    count_classes,
    count_classes_naive,
    cycle_weight,
    divisor_weight,
    fixed_map_count,
    total_maps,
)
from endocount.errors import BudgetExceeded, DomainError
from endocount.partitions import Partition, class_size, enumerate_partitions

VARIANTS = list(Variant)


def test_divisor_weight_examples():
    # letters in cycles of length 1 or 2 for a transposition plus a fixed point
    assert divisor_weight(Partition((1, 2)), 2) == 1 * 1 + 2 * 1
    assert divisor_weight(Partition((1, 1)), 1) == 2
    assert divisor_weight(Partition((4,)), 4) == 4
    assert divisor_weight(Partition((2, 3)), 3) == 3


def test_divisor_weight_rejects_missing_length():
    with pytest.raises(DomainError):
        divisor_weight(Partition((1, 2)), 3)


def test_cycle_weight_examples():
    assert cycle_weight(2, 1, "semigroup") == 2
    assert cycle_weight(3, 2, "semigroup") == 3 + 9
    for m in range(1, 8):
        assert cycle_weight(1, m, "monoid") == m + 1
        assert cycle_weight(1, m, "semigroup") == m
        assert cycle_weight(1, m, "uniform") == 1


@given(s=st.integers(0, 40), m=st.integers(1, 15), v=st.sampled_from(VARIANTS))
def test_cycle_weight_matches_direct_sum(s, m, v):
    assert cycle_weight(s, m, v) == sum(s**k for k in v.lengths(m))


def test_fixed_map_count_examples():
    assert fixed_map_count(Partition((1, 1)), 1, "semigroup") == 4
    assert fixed_map_count(Partition((2,)), 1, "semigroup") == 2


@pytest.mark.parametrize("v", VARIANTS)
@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("m", range(1, 6))
def test_identity_fixes_everything(v, n, m):
    assert fixed_map_count(Partition((1,) * n), m, v) == total_maps(n, m, v)


@pytest.mark.parametrize("n", range(2, 8))
@pytest.mark.parametrize("m", range(1, 6))
def test_total_maps_geometric_form(n, m):
    assert total_maps(n, m, "semigroup") == ((n ** (m + 1) - n) // (n - 1)) ** n
    assert total_maps(n, m, "uniform") == n ** (m * n)


def test_total_maps_small():
    assert total_maps(2, 2, "semigroup") == (2 + 4) ** 2 == 36
    assert total_maps(1, 4, "monoid") == 5
    assert total_maps(2, 1, "monoid") == 9


@pytest.mark.parametrize("n,m,v,expected", [
    (2, 1, "semigroup", 3),
    (3, 2, "semigroup", 304),
    (4, 1, "semigroup", 19),
    (5, 2, "semigroup", 207258),
    (2, 2, "uniform", 10),
    (3, 1, "monoid", 16),
    (4, 3, "monoid", 2180845),
])
def test_count_classes_published_values(n, m, v, expected):
    assert count_classes(n, m, v) == expected


@pytest.mark.parametrize("m", range(1, 10))
def test_single_letter(m):
    assert count_classes(1, m, "semigroup") == m
    assert count_classes(1, m, "monoid") == m + 1
    assert count_classes(1, m, "uniform") == 1


def test_naive_examples():
    assert count_classes_naive(2, 1) == 3
    assert count_classes_naive(4, 2) == 6915


@pytest.mark.parametrize("v", VARIANTS)
def test_naive_matches_grouped(v):
    for n, m in product(range(1, 7), range(1, 5)):
        assert count_classes_naive(n, m, v) == count_classes(n, m, v)


def test_naive_budget_refusal():
    with pytest.raises(BudgetExceeded, match="budget 8"):
        count_classes_naive(9, 1)
    with pytest.raises(BudgetExceeded):
        count_classes_naive(5, 1, max_n=4)


@pytest.mark.parametrize("v", VARIANTS)
def test_burnside_sum_exactly_divisible(v):
    for n, m in product(range(1, 9), range(1, 13)):
        total = sum(class_size(p) * fixed_map_count(p, m, v) for p in enumerate_partitions(n))
        assert total % factorial(n) == 0


@pytest.mark.parametrize("v", VARIANTS)
def test_bounds(v):
    for n, m in product(range(1, 7), range(1, 6)):
        c, t = count_classes(n, m, v), total_maps(n, m, v)
        assert 1 <= c <= t
        assert c * factorial(n) >= t


@pytest.mark.parametrize("bad", [(0, 1), (1, 0), (-1, 2)])
def test_rejects_nonpositive(bad):
    with pytest.raises(DomainError):
        count_classes(*bad)


def test_unknown_variant():
    with pytest.raises(DomainError, match="unknown variant"):
        count_classes(2, 2, "group")


def test_counts_exceed_64_bits():
    assert count_classes(6, 6) > 2**64
