from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import partition_counts
from liegrowth.series import (
    euler_product_direct,
    euler_transform,
    fit_stretched_exponent,
    gamma_to_graded,
    ln_big,
)


def test_gamma_to_graded_inverts_cumsum():
    gamma = [0, 2, 3, 5, 8]
    assert gamma_to_graded(gamma) == [0, 2, 1, 2, 3]


def test_gamma_to_graded_rejects_decreasing():
    with pytest.raises(ValueError, match="decreases"):
        gamma_to_graded([0, 2, 1])
    with pytest.raises(ValueError):
        gamma_to_graded([1, 2, 3])


def test_euler_transform_frozen_examples():
    assert euler_transform([0, 1, 0, 0, 0, 0]) == [1, 1, 1, 1, 1, 1]
    assert euler_transform([0, 2, 0, 0, 0, 0]) == [1, 2, 3, 4, 5, 6]
    assert euler_transform([0, 1, 1, 0], 3) == [1, 1, 2, 2]


def test_euler_transform_all_ones_gives_partitions():
    b = euler_transform([0] + [1] * 200)
    oracle = partition_counts(200)
    assert b == oracle
    assert b[4] == 5 and b[10] == 42


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=5), min_size=1, max_size=60)
)
def test_euler_transform_matches_direct_product(values):
    a = [0] + values
    assert euler_transform(a) == euler_product_direct(a)


def test_euler_transform_monotone_for_nonzero_a1():
    a = [0, 1, 3, 0, 2, 0, 0, 1, 0, 0, 5]
    b = euler_transform(a)
    assert all(b[n] <= b[n + 1] for n in range(len(b) - 1))


def test_euler_rejects_bad_input():
    with pytest.raises(ValueError):
        euler_transform([1, 1])
    with pytest.raises(ValueError):
        euler_transform([0, -1])
    with pytest.raises(ValueError):
        euler_transform([0, 1], 5)


def test_ln_big_matches_float_log_on_huge_ints():
    n = 7 ** 4000
    approx = ln_big(n)
    assert abs(approx - 4000 * math.log(7)) < 1e-9 * approx
    with pytest.raises(ValueError):
        ln_big(0)


def test_fit_exact_power_of_two_input():
    # b_n = 2**round(n^(2/3)/ln 2) gives ln b_n = n^(2/3) up to rounding
    N = 1024
    b = [1, 2] + [1 << round(n ** (2 / 3) / math.log(2)) for n in range(2, N + 1)]
    fit = fit_stretched_exponent(b, [64, 128, 256, 512])
    assert abs(fit.final - 2 / 3) < 0.02
    assert fit.classification == "intermediate"
    assert fit.method == "doubling-log-ratio"
    assert [n for n, _ in fit.estimates] == [64, 128, 256, 512]


def test_fit_polynomial_input_flags_not_intermediate():
    N = 1 << 21
    b = [max(n, 1) ** 3 for n in range(N + 1)]
    fit = fit_stretched_exponent(b, [1 << 20])
    assert fit.final < 0.1
    assert fit.classification == "polynomial-like"


def test_fit_exponential_input_flags_not_intermediate():
    b = [2 ** n for n in range(257)]
    fit = fit_stretched_exponent(b, [16, 64, 128])
    assert fit.final > 0.98
    assert fit.classification == "exponential-like"


def test_fit_tracks_exponent_of_consecutive_power_differences():
    # a_n = (n+1)^(d+1) - n^(d+1) grows like n^d, so alpha should approach
    # (d+1)/(d+2)
    for d in (1, 2):
        N = 2048
        a = [0] + [(n + 1) ** (d + 1) - n ** (d + 1) for n in range(1, N + 1)]
        b = euler_transform(a)
        fit = fit_stretched_exponent(b, [256, 512, 1024])
        target = (d + 1) / (d + 2)
        assert abs(fit.final - target) < 0.05, (d, fit.final, target)


def test_fit_rejects_degenerate_points():
    b = [1, 1, 1, 2, 3, 4, 5, 6, 7]
    with pytest.raises(ValueError):
        fit_stretched_exponent(b, [1])  # b_1 = 1
    with pytest.raises(ValueError):
        fit_stretched_exponent(b, [8])  # 2n out of range
    with pytest.raises(ValueError):
        fit_stretched_exponent(b, [])
