"""Tests for the q-series engine, crossover, and growth diagnostics."""

from __future__ import annotations

import math

import pytest

from flexk3.qseries import (
    CrossoverRow,
    asym_flex,
    asym_yz,
    crossover,
    divisor_sums,
    euler_power_neg24,
    euler_power_neg24_by_product,
    log_int,
    yz_multiple,
)

A_SMALL = [
    1,
    24,
    324,
    3200,
    25650,
    176256,
    1073720,
    5930496,
    30178575,
    143184000,
    639249300,
    2705114880,
    10914317934,
]


def test_divisor_sums_sieve():
    assert divisor_sums(12) == [0, 1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28]


def test_euler_series_known_coefficients():
    assert list(euler_power_neg24(12)) == A_SMALL


def test_euler_series_positive_and_increasing():
    series = euler_power_neg24(201)
    assert series[0] == 1
    for n in range(1, 201):
        assert series[n] > 0
    for n in range(1, 200):
        assert series[n + 1] > series[n]


def test_recurrence_matches_product_oracle():
    assert euler_power_neg24(200) == euler_power_neg24_by_product(200)


def test_yz_multiple_values():
    assert yz_multiple(1) == 324
    assert yz_multiple(2) == 3200
    assert yz_multiple(8) == 143184000
    assert yz_multiple(50) > 0


def test_series_requires_positive_bound():
    with pytest.raises(ValueError):
        euler_power_neg24(0)
    with pytest.raises(ValueError):
        euler_power_neg24_by_product(0)
    with pytest.raises(ValueError):
        yz_multiple(0)


def test_crossover_first_row():
    report = crossover(3)
    assert report.rows[0] == CrossoverRow(1, 3, 324, False)


def test_crossover_switch_location():
    report = crossover(20)
    assert report.first_flex_dominant == 10
    assert report.model_first_flex_dominant == 11
    for row in report.rows:
        assert row.flex_larger == (row.d >= 10)


def test_crossover_none_in_short_range():
    report = crossover(1)
    assert report.first_flex_dominant is None
    assert report.model_first_flex_dominant is None


def test_crossover_permanence_to_64():
    # crossover() itself raises if dominance ever flips back
    report = crossover(64)
    assert report.first_flex_dominant == 10
    assert all(row.flex_larger for row in report.rows if row.d >= 10)


def test_log_int_moderate_values():
    assert log_int(1) == 0.0
    assert math.isclose(log_int(324), math.log(324), rel_tol=1e-12)


def test_log_int_huge_values():
    assert math.isclose(log_int(10**5000), 5000 * math.log(10), rel_tol=1e-12)
    with pytest.raises(ValueError):
        log_int(0)


def test_asym_flex_report_fields():
    report = asym_flex(1)
    assert report.d == 1
    assert math.isclose(report.log_exact, math.log(3), rel_tol=1e-12)
    assert math.isclose(
        report.log_ratio, report.log_exact - report.log_model, rel_tol=1e-12
    )


def test_asym_flex_convergence():
    assert abs(asym_flex(500).log_ratio) < 0.01
    magnitudes = [abs(asym_flex(d).log_ratio) for d in (50, 100, 200, 400)]
    assert magnitudes == sorted(magnitudes, reverse=True)


def test_asym_yz_convergence():
    report = asym_yz(1000)
    assert abs(report.log_ratio) / report.log_exact < 0.02
    magnitudes = [abs(asym_yz(d).log_ratio) for d in (100, 400, 900)]
    assert magnitudes == sorted(magnitudes, reverse=True)


def test_asym_finite_at_d1():
    report = asym_yz(1)
    assert math.isfinite(report.log_exact)
    assert math.isfinite(report.log_model)
    with pytest.raises(ValueError):
        asym_flex(0)
    with pytest.raises(ValueError):
        asym_yz(0)
