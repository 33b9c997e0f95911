"""Tests for the two-row Schubert calculus."""

from __future__ import annotations

import random

import pytest

from flexk3.exact import catalan
from flexk3.schubert import BoxPartition, SchubertElement, monomial_integral


def s(box: int, a: int, b: int) -> SchubertElement:
    return SchubertElement.basis(box, a, b)


def iterate(box: int, n_sigma2: int, m_sigma1: int) -> SchubertElement:
    """Apply sigma2 n times, then sigma1 m times, to s_(0,0)."""
    elem = SchubertElement.one(box)
    for _ in range(n_sigma2):
        elem = elem.mul_sigma2()
    for _ in range(m_sigma1):
        elem = elem.pieri_sigma1()
    return elem


def test_box_partition_validation():
    assert BoxPartition(2, 1).in_box(2)
    assert not BoxPartition(3, 1).in_box(2)
    assert not BoxPartition(1, 2).in_box(3)
    assert not BoxPartition(1, -1).in_box(3)


def test_element_rejects_bad_partitions():
    with pytest.raises(ValueError):
        SchubertElement(2, {(3, 0): 1})
    with pytest.raises(ValueError):
        SchubertElement(2, {(1, 2): 1})
    with pytest.raises(ValueError):
        SchubertElement(0, {})


def test_zero_coefficients_dropped():
    elem = SchubertElement(3, {(1, 0): 0, (2, 1): 5})
    assert elem.terms == {BoxPartition(2, 1): 5}
    assert (s(3, 1, 0) + (-1) * s(3, 1, 0)).is_zero()


def test_pieri_sigma1_clips_to_box():
    assert s(1, 1, 0).pieri_sigma1() == s(1, 1, 1)
    assert s(2, 1, 0).pieri_sigma1() == s(2, 2, 0) + s(2, 1, 1)
    assert s(2, 2, 2).pieri_sigma1().is_zero()


def test_mul_sigma2_adds_column():
    assert s(2, 0, 0).mul_sigma2() == s(2, 1, 1)
    assert s(2, 1, 1).mul_sigma2() == s(2, 2, 2)
    assert s(2, 2, 0).mul_sigma2().is_zero()


def test_integrate_examples():
    assert iterate(1, 0, 2).integrate() == 1
    assert iterate(2, 0, 4).integrate() == 2
    assert iterate(3, 3, 0).integrate() == 1
    assert s(2, 1, 1).integrate() == 0


def test_operators_are_linear():
    x = SchubertElement(3, {(1, 0): 2, (2, 2): -1})
    y = SchubertElement(3, {(1, 1): 4, (1, 0): 1})
    assert (x + y).pieri_sigma1() == x.pieri_sigma1() + y.pieri_sigma1()
    assert (x + y).mul_sigma2() == x.mul_sigma2() + y.mul_sigma2()
    assert (3 * x).pieri_sigma1() == 3 * x.pieri_sigma1()


def test_degree_grading():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(1, 6)
        elem = SchubertElement.one(d)
        degree = 0
        for _ in range(rng.randint(1, 2 * d)):
            if rng.random() < 0.5:
                elem = elem.pieri_sigma1()
                degree += 1
            else:
                elem = elem.mul_sigma2()
                degree += 2
            assert elem.degrees() <= {degree}
            if degree != 2 * d:
                assert elem.integrate() == 0


def test_sigma1_annihilation_beyond_top():
    for d in range(1, 11):
        elem = SchubertElement.one(d)
        for _ in range(2 * d + 1):
            elem = elem.pieri_sigma1()
        assert elem.is_zero()


def test_monomial_integral_values():
    assert monomial_integral(4, 0, 2) == 2
    assert monomial_integral(6, 0, 3) == 5
    assert monomial_integral(2, 0, 1) == 1
    for d in range(1, 9):
        assert monomial_integral(0, d, d) == 1
        assert monomial_integral(2 * d, 0, d) == catalan(d)


def test_monomial_integral_rejects_bad_input():
    with pytest.raises(ValueError):
        monomial_integral(3, 1, 2)
    with pytest.raises(ValueError):
        monomial_integral(2, 0, 2)
    with pytest.raises(ValueError):
        monomial_integral(-2, 2, 1)
    with pytest.raises(ValueError):
        monomial_integral(2, 0, 0)


def test_pieri_matches_formula_canonical_order():
    for d in range(1, 13):
        for n in range(d + 1):
            m = 2 * d - 2 * n
            assert iterate(d, n, m).integrate() == monomial_integral(m, n, d)


def test_pieri_order_independence():
    # the ring is commutative, so interleavings must not matter
    rng = random.Random(7)
    for _ in range(60):
        d = rng.randint(1, 8)
        n = rng.randint(0, d)
        m = 2 * d - 2 * n
        ops = ["s1"] * m + ["s2"] * n
        rng.shuffle(ops)
        elem = SchubertElement.one(d)
        for op in ops:
            elem = elem.pieri_sigma1() if op == "s1" else elem.mul_sigma2()
        assert elem.integrate() == monomial_integral(m, n, d)
