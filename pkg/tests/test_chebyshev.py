"""Tests for the integer-polynomial recurrence and its derived series."""

import json

import pytest

from dyckpeaks.chebyshev import IntPoly, f_series_t, q_poly, r_series, u_inv_sq_series
from dyckpeaks.paths import bounded_height_count, enumerate_paths, statistics
from dyckpeaks.series import Series


def test_q_poly_base_cases_and_recurrence():
    assert q_poly(0).coeffs == (1,)
    assert q_poly(1).coeffs == (1,)
    assert q_poly(2).coeffs == (1, -1)
    assert q_poly(3).coeffs == (1, -2)
    assert q_poly(4).coeffs == (1, -3, 1)
    assert q_poly(5).coeffs == (1, -4, 3)


@pytest.mark.parametrize("k", range(13))
def test_q_poly_unit_constant_and_degree(k):
    poly = q_poly(k)
    assert poly.coeffs[0] == 1
    assert poly.degree == k // 2


def test_q_poly_negative_k_rejected():
    with pytest.raises(ValueError):
        q_poly(-1)


def test_int_poly_str():
    assert str(q_poly(4)) == "1 - 3x + x^2"
    assert str(IntPoly(())) == "0"
    assert str(IntPoly((0, 1))) == "x"
    assert str(IntPoly((-2, 0, 5))) == "-2 + 5x^2"


def test_int_poly_normalizes_trailing_zeros():
    assert IntPoly((1, 0, 0)).coeffs == (1,)
    assert IntPoly((0, 0)).coeffs == ()


def test_int_poly_serializes_as_json_coefficient_array():
    assert json.dumps(list(q_poly(4).coeffs)) == "[1, -3, 1]"
    assert IntPoly(tuple(json.loads("[1, -3, 1]"))) == q_poly(4)


def test_r_series_small_k():
    assert r_series(0, 5) == Series.zero(5)
    assert list(r_series(1, 5).coeffs) == [1, 0, 0, 0, 0, 0]
    assert list(r_series(2, 5).coeffs) == [1, 1, 1, 1, 1, 1]
    assert list(r_series(3, 5).coeffs) == [1, 1, 2, 4, 8, 16]


@pytest.mark.parametrize("k", range(1, 11))
def test_ratio_identity_to_order_50(k):
    # q_k * R_k = q_{k-1} up to the truncation order
    order = 50
    lhs = q_poly(k).to_series(order) * r_series(k, order)
    assert lhs == q_poly(k - 1).to_series(order)


@pytest.mark.parametrize("k", range(1, 9))
def test_r_series_matches_step_iteration(k):
    # independent route: iterate R -> 1/(1 - x*R) from 0, k times
    iterated = Series.zero(40)
    for _ in range(k):
        iterated = (1 - iterated.shift(1)).reciprocal()
    assert r_series(k, 40) == iterated


@pytest.mark.parametrize("k", range(1, 7))
def test_r_series_counts_height_bounded_paths(k):
    # coefficient n = number of semilength-n paths with max height <= k-1
    coeffs = r_series(k, 8).as_integer_sequence()
    for n in range(9):
        expected = sum(
            1 for p in enumerate_paths(n) if statistics(p).max_height <= k - 1
        )
        assert coeffs[n] == expected


def test_u_inv_sq_small_cases():
    assert u_inv_sq_series(1, 4) == Series.monomial(1, 1, 4)
    assert list(u_inv_sq_series(2, 4).coeffs) == [0, 0, 1, 2, 3]
    assert list(u_inv_sq_series(3, 5).coeffs) == [0, 0, 0, 1, 4, 12]


def test_u_inv_sq_requires_k_at_least_1():
    with pytest.raises(ValueError):
        u_inv_sq_series(0, 4)


@pytest.mark.parametrize("k", range(1, 9))
def test_u_inv_sq_times_q_squared_is_monomial(k):
    order = 40
    q = q_poly(k).to_series(order)
    assert u_inv_sq_series(k, order) * q * q == Series.monomial(1, k, order)


def test_f_series_t_band_zero():
    assert f_series_t(0, 5) == Series.one(5)


def test_f_series_t_zigzag():
    assert list(f_series_t(1, 5).coeffs) == [0, 1, 0, 1, 0, 1]


def test_f_series_t_coefficient_example():
    assert f_series_t(2, 4).coeffs[4] == 2


@pytest.mark.parametrize("k", range(6))
def test_f_series_t_matches_band_dp(k):
    coeffs = f_series_t(k, 30).as_integer_sequence()
    for n in range(31):
        assert coeffs[n] == bounded_height_count(n, k, k)
