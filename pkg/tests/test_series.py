from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tridend.primitives import primitive_basis
from tridend.series import (RationalSeries, big_schroeder, check_series_identities, coass_series,
                            codend_series, small_schroeder, tree_series)
from tridend.trees import enumerate_trees


def large_schroeder_oracle(n_max):
    """S_n = S_{n-1} + Σ_{k<n} S_k S_{n-1-k}; the small numbers are S_n / 2 for n >= 1."""
    s = [1]
    for n in range(1, n_max + 1):
        s.append(s[n - 1] + sum(s[k] * s[n - 1 - k] for k in range(n)))
    return s


def test_small_schroeder_values():
    assert small_schroeder(2) == 3
    assert [small_schroeder(n) for n in range(3, 9)] == [11, 45, 197, 903, 4279, 20793]
    assert small_schroeder(9) == 103049
    assert [small_schroeder(n) for n in (10, 11, 12)] == [518859, 2646723, 13648869]


def test_small_schroeder_against_oracle():
    big = large_schroeder_oracle(20)
    assert [small_schroeder(n) for n in range(1, 21)] == [b // 2 for b in big[1:]]
    assert all(b % 2 == 0 for b in big[1:])


def test_big_schroeder_values():
    assert [big_schroeder(n) for n in range(0, 7)] == [0, 1, 1, 2, 6, 22, 90]
    with pytest.raises(ValueError):
        big_schroeder(-1)
    with pytest.raises(ValueError):
        small_schroeder(-1)


def test_series_identities():
    report = check_series_identities(12)
    assert report.ok, report.violations
    assert report.cases == 5
    with pytest.raises(ValueError):
        check_series_identities(2)


def test_series_spot_values():
    R = tree_series(8)
    assert (R / ((1 + R) * (1 + R)))[5] == 22
    X = RationalSeries.x(8)
    assert (X + 2 * X * R)[4] == 22
    assert coass_series(6).integer_coefficients() == [0, 1, 2, 6, 22, 90, 394]
    assert codend_series(6).integer_coefficients() == [0, 1, 1, 2, 6, 22, 90]


def test_counts_match_enumeration():
    for n in range(0, 9):
        assert small_schroeder(n) == len(enumerate_trees(n))


def test_counts_match_kernel_dimensions():
    for n in range(1, 7):
        assert big_schroeder(n) == primitive_basis("codend", n).dimension
    for n in range(1, 6):
        assert big_schroeder(n + 1) == primitive_basis("coass", n).dimension


def test_series_arithmetic():
    X = RationalSeries.x(5)
    one_minus_x = 1 - X
    geometric = one_minus_x.inverse()
    assert geometric.coeffs == tuple(Fraction(1) for _ in range(6))
    assert (X * X).divide_by_x() == RationalSeries.x(4)
    with pytest.raises(ZeroDivisionError):
        X.inverse()
    with pytest.raises(ArithmeticError):
        (1 + X).divide_by_x()
    with pytest.raises(ValueError):
        RationalSeries([Fraction(1, 2)]).integer_coefficients()


coeffs = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=7)


@given(coeffs, coeffs)
def test_inverse_is_exact(a, b):
    x = RationalSeries(a)
    if x[0] == 0:
        return
    y = RationalSeries(b, x.order)
    assert x * x.inverse() == RationalSeries.constant(1, x.order)
    assert (y / x) * x == y
