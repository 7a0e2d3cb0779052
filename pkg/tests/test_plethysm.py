import itertools

import pytest
from hypothesis import given, settings, strategies as st

from plethy.partitions import Partition, partitions_of
from plethy.plethysm import (
    PlethysmExpression,
    chain_of,
    expand,
    hc_coefficients,
    hc_expansion,
    iterated,
    p_compose,
    plethysm,
    schur_plethysm,
)
from plethy.symfunc import PSeries, SchurExpansion, p_multiply, p_to_schur, schur, schur_to_p


def S(*pairs):
    terms = {Partition(lam): c for lam, c in pairs}
    return SchurExpansion(sum(next(iter(terms))), terms)


@pytest.mark.parametrize("outer, inner, expected", [
    ((1, 1), (1, 1), S(((2, 1, 1), 1))),
    ((2,), (1, 1), S(((1, 1, 1, 1), 1), ((2, 2), 1))),
    ((1, 1), (2,), S(((3, 1), 1))),
    ((2,), (2,), S(((4,), 1), ((2, 2), 1))),
])
def test_degree_four_plethysms(outer, inner, expected):
    assert schur_plethysm(outer, schur(inner)) == expected


def test_p_compose_identity_and_power():
    g = schur_to_p((2, 1))
    assert p_compose(1, g) == g
    assert p_compose(3, PSeries.p((2,))) == PSeries.p((6,))


def test_plethysm_rejects_degree_zero():
    with pytest.raises(ValueError):
        plethysm(PSeries.p((2,)), PSeries.one())


def test_chain_str_and_degree():
    expr = chain_of(2, 3, 2)
    assert expr.degree == 12
    assert str(expr) == "s[2] o s[3] o s[2]"


def test_example_intro_gamma_rows():
    assert tuple(hc_coefficients(chain_of(2, 3, 2), 0)) == (1, 2, 3, 3, 2, 1)
    # gamma=1 betas 0..4: (11,1), (9,2,1), (7,2,2,1), (5,2^3,1), (3,2^4,1)
    assert tuple(hc_coefficients(chain_of(2, 3, 2), 1)) == (0, 1, 1, 1, 0)


def test_example_intro_extra_term():
    # The example's list of eight coefficients leaves out s(9,2,1), which is 1.
    assert hc_expansion(chain_of(2, 3, 2))[(9, 2, 1)] == 1


def test_arrows_figure_hook_column_part():
    assert hc_expansion(chain_of(2, 2, 3)) == S(((12,), 1), ((10, 2), 2), ((9, 2, 1), 1),
                                                ((8, 2, 2), 2), ((6, 2, 2, 2), 1))


@pytest.mark.parametrize("expr, gamma, seq", [
    (chain_of(2, 2, 2, 2), 0, (1, 3, 8, 13, 13, 8, 3, 1)),
    (chain_of(3, 4), 0, (1, 1, 1, 0, 0, 0)),
    (chain_of(3, 2), 0, (1, 1, 1)),
])
def test_hc_coefficients(expr, gamma, seq):
    assert tuple(hc_coefficients(expr, gamma)) == seq


@pytest.mark.parametrize("f", [(2,), (2, 1)])
@pytest.mark.parametrize("n", [2, 3])
def test_power_sums_commute_with_everything(f, n):
    g = schur_to_p(f)
    assert plethysm(PSeries.p((n,)), g) == plethysm(g, PSeries.p((n,)))


def small_pseries():
    return st.integers(1, 3).flatmap(lambda n: st.lists(
        st.tuples(st.sampled_from(list(partitions_of(n))), st.integers(-3, 3)),
        min_size=1, max_size=3).map(lambda terms: _combine(n, terms)))


def _combine(n, terms):
    out = PSeries(n)
    for lam, c in terms:
        out = out + schur_to_p(lam).scale(c)
    return out


@settings(max_examples=25, deadline=None)
@given(small_pseries(), small_pseries(), st.sampled_from([(1,), (2,), (1, 1), (2, 1)]))
def test_plethysm_is_multiplicative(f, g, h):
    h = schur_to_p(h)
    assert plethysm(p_multiply(f, g), h) == p_multiply(plethysm(f, h), plethysm(g, h))


def _row_column_chains(max_degree):
    atoms = [lam for n in range(1, 5) for lam in [(n,), (1,) * n]
             if n > 1] + [(1,)]
    atoms = sorted(set(atoms))
    for k in (2, 3):
        for chain in itertools.product(atoms, repeat=k):
            deg = 1
            for lam in chain:
                deg *= sum(lam)
            if 4 <= deg <= max_degree and all(sum(l) > 1 for l in chain):
                yield chain


@pytest.mark.parametrize("chain", list(_row_column_chains(16)), ids=str)
def test_iterated_plethysms_are_schur_positive(chain):
    f = expand(PlethysmExpression(chain))
    assert f.is_schur_positive()


@pytest.mark.parametrize("sigma", [(2,), (1, 1)])
@pytest.mark.parametrize("a, b", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_outer_plethysm_only_sees_hook_column_part(sigma, a, b):
    f = iterated(chain_of(b, a))
    full = hc_expansion(plethysm(schur_to_p(sigma), f))
    reduced = hc_expansion(plethysm(schur_to_p(sigma), hc_expansion(f).to_p()))
    assert full == reduced


@pytest.mark.parametrize("alpha", range(2, 7))
@pytest.mark.parametrize("beta", range(0, 4))
def test_p2_and_p11_agree_on_gamma_zero(alpha, beta):
    mu = schur_to_p((alpha,) + (2,) * beta)
    assert hc_expansion(plethysm(PSeries.p((2,)), mu), 0) == \
        hc_expansion(plethysm(PSeries.p((1, 1)), mu), 0)


def test_restricted_projection_matches_full():
    f = iterated(chain_of(2, 2, 3))
    assert hc_expansion(f) == p_to_schur(f).hc_part()
