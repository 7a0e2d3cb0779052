from math import factorial
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plethy.partitions import (
    HookColumnShape,
    Partition,
    conjugate,
    format_partition,
    hook_column,
    hook_column_betas,
    hook_column_decompose,
    hook_columns_of,
    is_hook_column,
    parse_partition,
    partition_count,
    partition_sum,
    partition_union,
    partitions_of,
    remove_strips,
    add_strips,
    two_sign,
    z_of,
)


def partitions(max_weight=20):
    return st.integers(0, max_weight).flatmap(
        lambda n: st.sampled_from(list(partitions_of(n))))


def test_partitions_of_four_in_order():
    assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_zero():
    assert list(partitions_of(0)) == [()]


def test_partition_count_32():
    assert sum(1 for _ in partitions_of(32)) == 8349 == partition_count(32)


@pytest.mark.parametrize("n", range(0, 41, 5))
def test_enumeration_matches_pentagonal_recurrence(n):
    assert sum(1 for _ in partitions_of(n)) == partition_count(n)


def test_partition_rejects_increasing():
    with pytest.raises(ValueError, match="weakly decreasing"):
        Partition((1, 2))


def test_parse_and_format():
    lam = parse_partition("[6,2^3,1]")
    assert lam == (6, 2, 2, 2, 1)
    assert format_partition(lam) == "[6,2,2,2,1]"
    assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("lam, z", [((2, 1, 1), 4), ((5,), 5), ((1,) * 6, factorial(6))])
def test_z_of(lam, z):
    assert z_of(lam) == z


@pytest.mark.parametrize("n", range(0, 11))
def test_class_sizes_sum_to_factorial(n):
    assert sum(Fraction(factorial(n), z_of(lam)) for lam in partitions_of(n)) == factorial(n)


def test_sum_and_union():
    assert partition_sum((3, 1), (2, 2)) == (5, 3)
    assert partition_union((2, 1), (2,)) == (2, 2, 1)
    assert partition_union((4, 1), ()) == (4, 1)


@given(partitions())
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_two_sign_examples():
    assert two_sign((4, 3, 1)) == -1
    assert two_sign((2,)) == 1
    assert two_sign((1, 1)) == -1
    assert two_sign((3,)) is None
    assert two_sign((2, 1)) is None


@pytest.mark.parametrize("n", range(2, 31, 2))
def test_two_sign_depends_only_on_gamma_mod_4(n):
    table = {0: 1, 1: -1, 2: -1, 3: 1}
    for lam in hook_columns_of(n):
        sign = two_sign(lam)
        # odd alpha with odd gamma and beta >= 1 has 2-core (2,1): no tiling
        if sign is not None:
            assert sign == table[hook_column_decompose(lam).gamma % 4], lam


@given(partitions(14), st.integers(1, 5))
def test_strip_add_remove_are_inverse(lam, k):
    for mu, sign in add_strips(lam, k):
        assert sum(mu) == sum(lam) + k
        assert (Partition(lam), sign) in remove_strips(mu, k)


def test_hook_column_decompose_literal_alpha():
    assert hook_column_decompose((6, 2, 2, 2, 1)) == HookColumnShape(6, 3, 1)
    assert hook_column_decompose((1, 1, 1)) == HookColumnShape(1, 0, 2)
    assert hook_column_decompose((3, 3)) is None
    assert not is_hook_column((4, 3, 1))


@given(st.integers(1, 12), st.integers(0, 6), st.integers(0, 8))
def test_shape_round_trip(alpha, beta, gamma):
    if alpha == 1 and beta > 0:
        with pytest.raises(ValueError):
            HookColumnShape(alpha, beta, gamma)
        return
    shape = HookColumnShape(alpha, beta, gamma)
    assert hook_column_decompose(shape.partition()) == shape
    assert shape.partition().weight == shape.weight


@pytest.mark.parametrize("n", range(1, 25))
def test_hook_column_betas_cover_every_hook_column(n):
    listed = {hook_column(n, b, g) for g in range(n) for b in hook_column_betas(n, g)}
    assert listed == set(hook_columns_of(n))
    assert None not in listed
