import pytest

from plethy.closed_forms import (
    hc_product,
    langley_remmel,
    offset_for,
    oeis,
    p2_hookcolumn,
    thm_s2_sb_sa,
    thm_sc_s2_sa,
)
from plethy.flip import hc_sequence, is_flip_symmetric
from plethy.partitions import hook_columns_of
from plethy.plethysm import chain_of, hc_expansion, plethysm
from plethy.symfunc import PSeries, SchurExpansion, p_multiply, schur_to_p


def row(out, gamma=0):
    return tuple(hc_sequence(out.to_schur(), gamma))


def test_langley_remmel_examples():
    assert langley_remmel(2, 2).to_schur() == SchurExpansion(4, {(4,): 1, (2, 2): 1})
    assert row(langley_remmel(2, 3)) == (1, 1, 1)
    assert row(langley_remmel(4, 3)) == (1, 1, 1, 0, 0, 0)


def test_theorem_rows():
    assert row(thm_s2_sb_sa(2, 3)) == (1, 2, 3, 3, 2, 1)
    assert row(thm_s2_sb_sa(2, 4)) == (1, 2, 3, 4, 4, 3, 2, 1)
    assert row(thm_sc_s2_sa(2, 2)) == (1, 2, 2, 1)
    assert row(thm_sc_s2_sa(2, 3)) == (1, 2, 4, 4, 2, 1)
    assert thm_sc_s2_sa(2, 2).to_schur()[(5, 2, 1)] == 1


def test_arrows_figure_from_formula():
    assert thm_s2_sb_sa(3, 2).to_schur() == SchurExpansion(
        12, {(12,): 1, (10, 2): 2, (9, 2, 1): 1, (8, 2, 2): 2, (6, 2, 2, 2): 1})


@pytest.mark.parametrize("a", [2, 3])
@pytest.mark.parametrize("b", [2, 3, 4])
def test_s2_sb_sa_matches_oracle(a, b):
    assert thm_s2_sb_sa(a, b).to_schur() == hc_expansion(chain_of(2, b, a))


@pytest.mark.parametrize("a", [2, 3])
@pytest.mark.parametrize("c", [2, 3, 4])
def test_sc_s2_sa_matches_oracle(a, c):
    assert thm_sc_s2_sa(a, c).to_schur() == hc_expansion(chain_of(c, 2, a))


@pytest.mark.parametrize("a", range(2, 6))
@pytest.mark.parametrize("b", range(2, 6))
def test_langley_remmel_matches_oracle(a, b):
    assert langley_remmel(a, b).to_schur() == hc_expansion(chain_of(b, a))


@pytest.mark.parametrize("a", range(2, 6))
@pytest.mark.parametrize("m", range(2, 6))
def test_theorem_outputs_are_flip_symmetric(a, m):
    assert is_flip_symmetric(thm_s2_sb_sa(a, m).to_schur(), offset_for(a, m, 2))
    assert is_flip_symmetric(thm_sc_s2_sa(a, m).to_schur(), offset_for(a, 2, m))


@pytest.mark.parametrize("c", range(2, 9))
def test_ramps_follow_reference_sequences(c):
    out = thm_sc_s2_sa(2, c)
    g0, g1 = row(out, 0), row(out, 1)
    assert g0[:c] == tuple(oeis("A000124", c))
    # gamma=1 entries at beta = 1..c-1 are quarter-squares floor((k+1)^2/4)
    assert g1[1:c] == tuple(oeis("A002620", c + 1)[2:c + 1])
    assert g0 == g0[::-1]
    core1 = g1[1:2 * c - 2]
    assert core1 == core1[::-1]


@pytest.mark.parametrize("b", range(2, 9))
def test_s2_ramps_are_symmetric(b):
    out = thm_s2_sb_sa(2, b)
    g0, g1 = row(out, 0), row(out, 1)
    assert g0 == g0[::-1]
    assert g1[1:2 * b - 2] == g1[1:2 * b - 2][::-1]


def test_last_gamma_one_entry_is_zero():
    for a in (2, 3):
        for c in (2, 3, 4):
            oracle = hc_expansion(chain_of(c, 2, a))
            n = 2 * a * c
            k = 2 * c - 2
            assert oracle[(n - 2 * k - 1,) + (2,) * k + (1,)] == 0


def test_parameter_guards():
    for fn in (langley_remmel, thm_s2_sb_sa, thm_sc_s2_sa):
        with pytest.raises(ValueError):
            fn(1, 3)


@pytest.mark.parametrize("n", range(2, 11))
def test_p2_hookcolumn_matches_oracle(n):
    for lam in hook_columns_of(n):
        if lam[0] >= 2:
            oracle = hc_expansion(plethysm(PSeries.p((2,)), schur_to_p(lam)))
            assert p2_hookcolumn(lam) == oracle, lam


def test_p2_of_s2():
    assert p2_hookcolumn((2,)) == SchurExpansion(4, {(4,): 1, (3, 1): -1, (2, 2): 1})


def test_hc_product_examples():
    assert hc_product((2,), (2,)).to_schur() == SchurExpansion(4, {(4,): 1, (3, 1): 1, (2, 2): 1})
    out = hc_product((3,), (2, 2)).to_schur()
    assert out[(5, 2)] == 1
    with pytest.raises(ValueError):
        hc_product((1, 1), (2,))


def _shapes(n_max):
    return [lam for n in range(2, n_max + 1) for lam in hook_columns_of(n) if lam[0] >= 2]


@pytest.mark.parametrize("mu", _shapes(10), ids=str)
def test_hc_product_matches_oracle(mu):
    for nu in _shapes(12 - sum(mu)):
        oracle = hc_expansion(p_multiply(schur_to_p(mu), schur_to_p(nu)))
        assert hc_product(mu, nu).to_schur() == oracle, (mu, nu)


def test_offsets():
    assert offset_for(2, 3, 2) == 2
    assert offset_for(3, 2, 2) == 6
    assert offset_for(2, 2, 2) == 2
    assert offset_for(3, 2, 1) == 4


def test_oeis():
    assert oeis("A000124", 6) == [1, 2, 4, 7, 11, 16]
    assert oeis("A000098", 9) == [1, 2, 5, 10, 19, 33, 57, 92, 147]
    assert oeis("A058696", 8) == [1, 2, 5, 11, 22, 42, 77, 135]
    assert oeis("A002620", 6) == [0, 0, 1, 2, 4, 6]
    with pytest.raises(KeyError):
        oeis("A000045", 3)
