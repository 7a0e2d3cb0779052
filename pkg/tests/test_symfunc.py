from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from plethy.partitions import Partition, conjugate, partitions_of
from plethy.symfunc import (
    NonIntegralCoefficient,
    PSeries,
    SchurExpansion,
    character,
    h_to_p,
    omega,
    p_multiply,
    p_to_schur,
    schur,
    schur_product,
    schur_to_p,
)


def partitions(lo=1, hi=7):
    return st.integers(lo, hi).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def test_character_table_degree_three():
    # rows s3, s21, s111; columns p3, p21, p111
    table = [[character(lam, mu) for mu in [(3,), (2, 1), (1, 1, 1)]]
             for lam in [(3,), (2, 1), (1, 1, 1)]]
    assert table == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character((2,), (1,))


def test_s2_in_power_sums():
    assert schur_to_p((2,)) == PSeries(2, {Partition((2,)): Fraction(1, 2),
                                           Partition((1, 1)): Fraction(1, 2)})


@pytest.mark.parametrize("n", range(1, 9))
def test_characters_are_orthonormal(n):
    from plethy.partitions import z_of
    lams = list(partitions_of(n))
    for lam in lams:
        for nu in lams:
            inner = sum(Fraction(character(lam, mu) * character(nu, mu), z_of(mu)) for mu in lams)
            assert inner == (1 if lam == nu else 0)


@given(partitions())
def test_schur_round_trip(lam):
    assert p_to_schur(schur_to_p(lam)) == schur(lam)


@given(partitions())
def test_omega_conjugates(lam):
    assert omega(schur_to_p(lam)) == schur_to_p(conjugate(lam))


def test_pieri_product():
    assert schur_product(schur((2,)), schur((1,))) == SchurExpansion(3, {(3,): 1, (2, 1): 1})


def test_h_basis():
    assert p_to_schur(h_to_p((2, 1))) == SchurExpansion(3, {(3,): 1, (2, 1): 1})


@settings(max_examples=30)
@given(partitions(1, 4), partitions(1, 4))
def test_product_is_commutative_and_schur_positive(lam, mu):
    a = p_to_schur(p_multiply(schur_to_p(lam), schur_to_p(mu)))
    b = p_to_schur(p_multiply(schur_to_p(mu), schur_to_p(lam)))
    assert a == b
    assert a.is_schur_positive()


def test_nonintegral_projection_raises():
    with pytest.raises(NonIntegralCoefficient):
        p_to_schur(PSeries(1, {Partition((1,)): Fraction(1, 2)}))


def test_schur_expansion_json_round_trip():
    f = SchurExpansion(4, {(4,): 1, (2, 2): 1})
    assert f.to_json() == '{"degree": 4, "terms": {"[4]": 1, "[2,2]": 1}}'
    assert SchurExpansion.from_json(f.to_json()) == f


def test_hc_part_and_gamma_filter():
    f = SchurExpansion(6, {(3, 3): 5, (4, 1, 1): 2, (2, 2, 2): 1, (4, 2): 7})
    assert f.hc_part() == SchurExpansion(6, {(4, 1, 1): 2, (2, 2, 2): 1, (4, 2): 7})
    assert f.hc_part(2) == SchurExpansion(6, {(4, 1, 1): 2})
