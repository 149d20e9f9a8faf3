from fractions import Fraction

import numpy as np
import pytest

from tracecodes.codes import LinearCode
from tracecodes.weights import (
    WeightError,
    power_moment_residuals,
    predicted_distribution,
    printed_third_multiplicity,
    weight_distribution,
    wmin_wmax_check,
)


@pytest.mark.parametrize(
    "family,p,m,e,expected",
    [
        ("D1", 3, 2, 1, {0: 1, 12: 60, 18: 20}),
        ("D1", 5, 2, 1, {0: 1, 80: 520, 100: 104}),
        ("D1BAR", 3, 3, 1, {0: 1, 72: 504, 81: 224}),
        ("D2", 5, 1, None, {0: 1, 19: 96, 20: 24, 24: 4}),
        ("D2", 3, 2, None, {0: 1, 51: 480, 54: 80, 60: 168}),
    ],
)
def test_enumerated_distributions(dists, family, p, m, e, expected):
    assert dists(family, p, m, e).counts == expected


@pytest.mark.parametrize(
    "family,p,m,e",
    [
        ("D1", 3, 2, 1),
        ("D1", 5, 2, 1),
        ("D1", 2, 3, 1),
        ("D1BAR", 3, 3, 1),
        ("D1BAR", 5, 2, 1),
        ("D2", 5, 1, None),
        ("D2", 3, 2, None),
        ("D2", 2, 2, None),
    ],
)
def test_closed_form_matches_enumeration(dists, family, p, m, e):
    predicted = predicted_distribution(family, p, m, e)
    enumerated = dists(family, p, m, e)
    assert predicted.counts == enumerated.counts
    assert (predicted.n, predicted.k) == (enumerated.n, enumerated.k)


def test_distribution_total_is_message_count(dists):
    dist = dists("D2", 3, 2)
    assert dist.total() == 3**6


@pytest.mark.parametrize(
    "p,m,printed,actual",
    [(5, 1, 384, 96), (3, 2, 1280, 480)],
)
def test_printed_low_weight_multiplicity_is_inconsistent(dists, p, m, printed, actual):
    # the published closed form contradicts the enumerated count; the
    # complement rule (total minus the other two classes) is what matches
    assert printed_third_multiplicity(p, m) == printed
    dist = dists("D2", p, m)
    w3 = p ** (2 * m - 1) * (p - 1) - p ** (m - 1)
    assert dist.counts[w3] == actual
    assert printed != actual


def test_prediction_requires_valid_parameters():
    with pytest.raises(WeightError):
        predicted_distribution("D1", 3, 2)  # missing e
    with pytest.raises(WeightError):
        predicted_distribution("D1", 3, 2, 2)  # e = m
    with pytest.raises(WeightError):
        predicted_distribution("XX", 3, 2, 1)


@pytest.mark.parametrize("p,m", [(5, 1), (3, 2), (2, 2), (2, 3)])
def test_three_weight_power_moments_vanish(dists, p, m):
    assert power_moment_residuals(dists("D2", p, m)) == (0, 0, 0)


def test_two_weight_power_moments(dists):
    # dual distance is 2 here, so the first two identities hold but not the third
    r0, r1, r2 = power_moment_residuals(dists("D1", 3, 2, 1))
    assert (r0, r1) == (0, 0)
    assert r2 != 0


def test_power_moments_exact_for_small_dimension():
    # k = 1 exercises the fractional intermediate terms
    gen = np.array([[1, 1, 0]], dtype=np.int64)
    dist = weight_distribution(LinearCode(p=2, n=3, k=1, gen=gen))
    r0, r1, r2 = power_moment_residuals(dist)
    assert r0 == 0
    assert isinstance(r1, (int, Fraction))


def test_ratio_check_boundary_and_strict(dists):
    equality = wmin_wmax_check(dists("D1", 3, 2, 1))
    assert equality.ratio == Fraction(2, 3)
    assert equality.threshold == Fraction(2, 3)
    assert not equality.passes

    strict = wmin_wmax_check(dists("D2", 3, 2))
    assert strict.ratio == Fraction(51, 60)
    assert strict.passes

    below = wmin_wmax_check(dists("D2", 5, 1))
    assert below.ratio == Fraction(19, 24)
    assert not below.passes


def test_enumeration_budget_guard():
    gen = np.zeros((25, 4), dtype=np.int64)
    big = LinearCode(p=2, n=4, k=25, gen=gen)
    with pytest.raises(WeightError):
        weight_distribution(big)


def test_csv_rendering(dists):
    text = dists("D1", 3, 2, 1).to_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "weight,multiplicity"
    assert "12,60" in lines and "18,20" in lines
