"""Degree multiple n_d of the flex divisor, by four independent methods.

On a polarized K3 surface of degree 2d, the flex divisor is a multiple
n_d of the polarization class, with

    n_d = (2d + 1) * C(d)^2           (C(d) the d-th Catalan number)
        = (2d)! (2d+1)! / (d!^2 (d+1)!^2).

This module computes n_d five ways and cross-validates:

  1. nd_closed        the Catalan closed form above
  2. nd_factorial     the factorial quotient, divisions asserted exact
  3. nd_double_sum    an alternating double binomial sum; the printed
                      formula evaluates to a consistent sign times n_d,
                      so both the raw value and the sign-resolved value
                      are reported
  4. nd_chern_monomial   intersection theory: expand the total Chern
                      class of the relevant tautological bundle, pair its
                      degree-(2d-1) part against sigma1 using the
                      closed-form monomial integrals
  5. nd_chern_schubert   the same pairing evaluated by operator iteration
                      in the Schubert basis, no closed-form integrals

Routes 4 and 5 share the Chern class table but integrate independently.
The sign of the double sum is not trusted a priori: it is calibrated once
against the closed form on d = 1..5 and must be consistent across that
range, otherwise an ArithmeticError flags the build as broken.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import binomial, catalan, exact_div, factorial
from .schubert import SchubertElement, monomial_integral
from .truncpoly import chern_total


@dataclass(frozen=True)
class FlexReport:
    """All method values for one d; agree covers the five resolved values."""

    d: int
    n_closed: int
    n_factorial: int
    n_sum_raw: int
    n_sum_resolved: int
    n_chern_monomial: int
    n_chern_schubert: int
    agree: bool


def _require_positive(d: int) -> None:
    if d < 1:
        raise ValueError(f"d must be a positive integer, got {d}")


def nd_closed(d: int) -> int:
    """(2d + 1) * C(d)^2."""
    _require_positive(d)
    return (2 * d + 1) * catalan(d) ** 2


def nd_factorial(d: int) -> int:
    """(2d)! (2d+1)! / (d!^2 (d+1)!^2), division asserted exact."""
    _require_positive(d)
    num = factorial(2 * d) * factorial(2 * d + 1)
    den = factorial(d) ** 2 * factorial(d + 1) ** 2
    return exact_div(num, den)


def _double_sum_raw(d: int) -> int:
    """Evaluate the alternating double sum exactly as printed.

    sum over 0 <= j <= d, 1 <= l <= d - j of
        (-1)^(j+1) C(4d+2, j) C(3d-j, 2d+l) C(2d+l, 2l-1) C(2l, l) / (l+1)

    Terms are accumulated as exact rationals; the total is asserted to be
    an integer.
    """
    total = Fraction(0)
    for j in range(d + 1):
        sign = -1 if j % 2 == 0 else 1
        cj = binomial(4 * d + 2, j)
        for ell in range(1, d - j + 1):
            term = (
                cj
                * binomial(3 * d - j, 2 * d + ell)
                * binomial(2 * d + ell, 2 * ell - 1)
                * binomial(2 * ell, ell)
            )
            total += Fraction(sign * term, ell + 1)
    if total.denominator != 1:
        raise ArithmeticError(f"double sum for d={d} is not an integer: {total}")
    return total.numerator


@lru_cache(maxsize=1)
def _double_sum_sign() -> int:
    """Calibrate the overall sign of the double sum against nd_closed.

    Checked on d = 1..5; the sign must be the same for all five values.
    """
    signs = set()
    for d in range(1, 6):
        raw = _double_sum_raw(d)
        target = nd_closed(d)
        if raw == target:
            signs.add(1)
        elif raw == -target:
            signs.add(-1)
        else:
            raise ArithmeticError(
                f"double sum for d={d} gives {raw}, neither {target} nor {-target}"
            )
    if len(signs) != 1:
        raise ArithmeticError(f"double sum sign is not consistent on d=1..5: {signs}")
    return signs.pop()


def nd_double_sum(d: int) -> tuple[int, int]:
    """Return (raw, resolved): the printed sum and the sign-corrected value."""
    _require_positive(d)
    raw = _double_sum_raw(d)
    return raw, _double_sum_sign() * raw


def nd_chern_monomial(d: int) -> int:
    """Pair sigma1 against the degree-(2d-1) Chern part via monomial integrals.

    n_d = - integral of sigma1 * c_(2d-1), each monomial s1^m * s2^n of
    c_(2d-1) contributing its coefficient times the closed-form integral
    of s1^(m+1) * s2^n.
    """
    _require_positive(d)
    total = 0
    for m, n, coef in chern_total(d).graded_part(2 * d - 1):
        total += coef * monomial_integral(m + 1, n, d)
    return -total


def nd_chern_schubert(d: int) -> int:
    """Same pairing as nd_chern_monomial, integrated in the Schubert basis.

    Each monomial is pushed from s_(0,0) through the Pieri operators
    (n times sigma2, then m + 1 times sigma1, the extra sigma1 being the
    pairing class) and read off at the top class.
    """
    _require_positive(d)
    total = 0
    for m, n, coef in chern_total(d).graded_part(2 * d - 1):
        elem = SchubertElement.one(d)
        for _ in range(n):
            elem = elem.mul_sigma2()
        for _ in range(m + 1):
            elem = elem.pieri_sigma1()
        total += coef * elem.integrate()
    return -total


def flex_report(d: int) -> FlexReport:
    """Compute every method for one d and record whether they all agree."""
    _require_positive(d)
    closed = nd_closed(d)
    fact = nd_factorial(d)
    raw, resolved = nd_double_sum(d)
    monomial = nd_chern_monomial(d)
    operator = nd_chern_schubert(d)
    agree = closed == fact == resolved == monomial == operator
    return FlexReport(d, closed, fact, raw, resolved, monomial, operator, agree)


def cross_check(d_lo: int, d_hi: int) -> list[FlexReport]:
    """Reports for d in [d_lo, d_hi]; raises ValueError on a bad range."""
    _require_positive(d_lo)
    if d_hi < d_lo:
        raise ValueError(f"empty range [{d_lo}, {d_hi}]")
    return [flex_report(d) for d in range(d_lo, d_hi + 1)]


def example_checks() -> bool:
    """Geometric bookkeeping checks tying n_1 and n_2 to curve counts.

    Degree 2: the flex curve is the ramification curve R of the double
    cover, and R^2 = 18 must equal (n_1 L)^2 = 9 * 2.  Degree 4 (n_2 = 20,
    flex curve degree 4 * n_2 = 80): on the Fermat quartic the flex locus
    is 48 lines with multiplicity 1 plus 4 plane quartic sections with
    multiplicity 2; on the Schur quartic it is 16 lines with multiplicity
    2 plus 48 lines with multiplicity 1.
    """
    n1 = nd_closed(1)
    n2 = nd_closed(2)
    ramification = n1 * n1 * 2 == 18
    fermat = 48 * 1 + 4 * (2 * 4) == 4 * n2
    schur = 16 * 2 + 48 * 1 == 4 * n2
    return ramification and fermat and schur
