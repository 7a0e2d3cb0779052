import json
import math

import pytest
from hypothesis import given, strategies as st

from plethy.analytics import (
    FitUnavailable,
    analyze,
    core,
    expected_masses,
    gaussian_fit,
    histogram_csv,
    index_moments,
    is_log_concave,
    is_symmetric,
    is_unimodal,
)

S2_POW5 = (1, 4, 20, 72, 205, 446, 756, 986, 986, 756, 446, 205, 72, 20, 4, 1)
S2_POW4 = (1, 3, 8, 13, 13, 8, 3, 1)


def test_core_and_symmetry():
    assert core((0, 0, 1, 2, 1, 0)) == (1, 2, 1)
    assert is_symmetric((1, 1, 1, 0, 0, 0))
    assert not is_symmetric((1, 2, 0))
    assert is_symmetric(())


def test_unimodality():
    assert is_unimodal((1, 2, 2, 1))
    assert is_unimodal(())
    assert not is_unimodal((1, 0, 1))


def test_degree_32_row_is_not_log_concave():
    lc = is_log_concave(S2_POW5)
    assert not lc
    assert lc.first_violation == 1  # 4^2 < 1 * 20
    assert is_unimodal(S2_POW5)


def test_binomial_rows_are_log_concave():
    assert is_log_concave([math.comb(10, k) for k in range(11)])


@given(st.lists(st.integers(1, 50), min_size=1, max_size=12))
def test_log_concave_positive_implies_unimodal(seq):
    if is_log_concave(seq):
        assert is_unimodal(seq)


def test_moments():
    mean, var = index_moments((1, 2, 1))
    assert mean == 1 and var == 0.5


def test_expected_masses_sum_to_total():
    masses = expected_masses(S2_POW5)
    assert math.isclose(sum(masses), sum(S2_POW5))


def test_gaussian_fit_values():
    fit = gaussian_fit(S2_POW5)
    assert fit.p_value >= 0.9
    assert fit.degrees_of_freedom == len(S2_POW5) - 2 - 3  # one bin merged per tail
    small = gaussian_fit(S2_POW4)
    assert small.degrees_of_freedom == 1
    assert 0.89 < small.p_value < 0.9  # just short of 0.9


def test_fit_unavailable():
    with pytest.raises(FitUnavailable):
        gaussian_fit((1, 2, 1))
    with pytest.raises(FitUnavailable):
        gaussian_fit((0, 0))


def test_report_json():
    report = json.loads(analyze(S2_POW5, "s2^5").to_json())
    assert report["is_log_concave"] is False
    assert report["first_log_concavity_violation"] == 1
    assert report["is_unimodal"] is True
    assert report["fit"]["p_value"] >= 0.9


def test_histogram_csv():
    text = histogram_csv(S2_POW4)
    lines = text.splitlines()
    assert lines[0] == "beta,count,expected"
    assert len(lines) == 1 + len(S2_POW4)
    assert text.endswith("\n")
