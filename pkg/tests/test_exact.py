"""Tests for the exact combinatorial kernel."""

from __future__ import annotations

import pytest

from flexk3.exact import binomial, catalan, exact_div, factorial


def test_factorial_base_cases():
    assert factorial(0) == 1
    assert factorial(1) == 1
    assert factorial(5) == 120
    assert factorial(12) == 479001600


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_known_values():
    assert binomial(4, 2) == 6
    assert binomial(10, 5) == 252
    assert binomial(0, 0) == 1
    assert binomial(16, 8) == 12870


def test_binomial_out_of_range_is_zero():
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(-3, 0) == 0
    assert binomial(-3, -2) == 0


def test_binomial_pascal_recurrence():
    # recurrence vs the factorial-formula implementation
    for n in range(1, 61):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_symmetry():
    for n in range(61):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)


def test_exact_div():
    assert exact_div(12870, 9) == 1430
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


def test_catalan_small_values():
    assert [catalan(d) for d in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_catalan_rejects_negative():
    with pytest.raises(ValueError):
        catalan(-2)


def test_catalan_recurrence():
    # (d+2) C(d+1) = (4d+2) C(d), exactly
    for d in range(201):
        assert catalan(d + 1) * (d + 2) == catalan(d) * (4 * d + 2)
