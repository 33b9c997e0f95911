"""Integer q-series engine for the 24-colored partition counts.

The Euler product P(q) = prod_{n >= 1} (1 - q^n)^(-24) generates the
numbers a(n) of partitions of n whose parts each carry one of 24 colors.
Its coefficient a(d+1) is the Yau-Zaslow multiple: the rational-curve
divisor on a degree-2d polarized K3 lies in |a(d+1) L|.

Coefficients come from the logarithmic-derivative recurrence

    n a(n) = 24 * sum_{k=1}^{n} sigma(k) a(n-k),    a(0) = 1,

with the divisor sums sigma(k) precomputed by sieve.  A direct truncated
product expansion is kept alongside as an independent oracle.

This module also compares the flex multiples n_d against the Yau-Zaslow
multiples (crossover) and checks both against their growth models

    n_d   ~ 2^(4d+1) / (pi d^2)
    yz_d  ~ e^(4 pi sqrt(d)) / (sqrt(2) d^(27/4))

using exact-integer logarithms, since the integers involved have far
too many digits for float conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Iterator, NamedTuple

from .exact import binomial, exact_div
from .flexdeg import nd_closed


@dataclass(frozen=True)
class IntSeries:
    """Dense exact coefficients a(0..N), indexed by q-exponent."""

    coeffs: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)


@dataclass(frozen=True)
class AsymReport:
    """Exact log versus growth-model log; log_ratio = log_exact - log_model."""

    d: int
    log_exact: float
    log_model: float
    log_ratio: float


class CrossoverRow(NamedTuple):
    d: int
    n_d: int
    yz_d: int
    flex_larger: bool


@dataclass(frozen=True)
class CrossoverReport:
    """Flex vs Yau-Zaslow comparison over d = 1..max_d.

    first_flex_dominant is the smallest d with n_d > yz_d (None if the
    range never gets there); model_first_flex_dominant is the same
    comparison applied to the two growth models, reported separately
    because the two notions of "switch" need not land on the same d.
    """

    rows: list[CrossoverRow]
    first_flex_dominant: int | None
    model_first_flex_dominant: int | None


def divisor_sums(N: int) -> list[int]:
    """sigma(k) = sum of divisors of k, for k = 0..N, by sieve; sigma(0) = 0."""
    if N < 0:
        raise ValueError(f"negative bound {N}")
    sums = [0] * (N + 1)
    for div in range(1, N + 1):
        for k in range(div, N + 1, div):
            sums[k] += div
    return sums


def euler_power_neg24(N: int) -> IntSeries:
    """Coefficients a(0..N) of prod (1 - q^n)^(-24) by the sigma recurrence."""
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    sigma = divisor_sums(N)
    a = [0] * (N + 1)
    a[0] = 1
    for n in range(1, N + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += sigma[k] * a[n - k]
        a[n] = exact_div(24 * acc, n)
    return IntSeries(tuple(a))


def euler_power_neg24_by_product(N: int) -> IntSeries:
    """Same coefficients by multiplying the truncated factors directly.

    (1 - q^n)^(-24) = sum_k C(k+23, 23) q^(nk).  Slower than the
    recurrence; retained as an independent oracle.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for n in range(1, N + 1):
        factor = [binomial(k + 23, 23) for k in range(N // n + 1)]
        out = [0] * (N + 1)
        for i, c in enumerate(coeffs):
            if not c:
                continue
            for k in range((N - i) // n + 1):
                out[i + n * k] += c * factor[k]
        coeffs = out
    return IntSeries(tuple(coeffs))


def yz_multiple(d: int) -> int:
    """Yau-Zaslow multiple for degree 2d: the coefficient a(d+1)."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    return euler_power_neg24(d + 1)[d + 1]


def log_int(n: int) -> float:
    """Natural log of a positive integer of any size.

    Splits off the binary digit count and converts only the leading 53
    bits, so huge integers never pass through a lossy float conversion.
    Relative error is well below 1e-9.
    """
    if n <= 0:
        raise ValueError(f"log of non-positive integer {n}")
    shift = n.bit_length() - 53
    if shift <= 0:
        return math.log(n)
    return math.log(n >> shift) + shift * math.log(2)


def flex_log_model(d: int) -> float:
    """ln of the flex growth model 2^(4d+1) / (pi d^2)."""
    return (4 * d + 1) * math.log(2) - math.log(math.pi) - 2 * math.log(d)


def yz_log_model(d: int) -> float:
    """ln of the Yau-Zaslow growth model e^(4 pi sqrt(d)) / (sqrt(2) d^(27/4))."""
    return 4 * math.pi * math.sqrt(d) - 0.5 * math.log(2) - 6.75 * math.log(d)


def asym_flex(d: int) -> AsymReport:
    """Compare ln n_d against the flex growth model."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    log_exact = log_int(nd_closed(d))
    log_model = flex_log_model(d)
    return AsymReport(d, log_exact, log_model, log_exact - log_model)


def asym_yz(d: int) -> AsymReport:
    """Compare ln yz_d against the Yau-Zaslow growth model."""
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    log_exact = log_int(yz_multiple(d))
    log_model = yz_log_model(d)
    return AsymReport(d, log_exact, log_model, log_exact - log_model)


def crossover(max_d: int) -> CrossoverReport:
    """Compare n_d against yz_d for d = 1..max_d.

    The series is built once to index max_d + 1.  After the first d with
    n_d > yz_d the dominance must persist through the rest of the range
    (n_d grows like 16^d, yz_d only like e^(4 pi sqrt(d))); a violation
    raises ArithmeticError since it would mean an arithmetic bug.
    """
    if max_d < 1:
        raise ValueError(f"max_d must be positive, got {max_d}")
    series = euler_power_neg24(max_d + 1)
    rows = []
    first = None
    for d in range(1, max_d + 1):
        flex = nd_closed(d)
        yz = series[d + 1]
        larger = flex > yz
        if larger and first is None:
            first = d
        if first is not None and not larger:
            raise ArithmeticError(f"crossover not permanent: n_{d} <= yz_{d} after d={first}")
        rows.append(CrossoverRow(d, flex, yz, larger))
    model_first = None
    for d in range(1, max_d + 1):
        if flex_log_model(d) > yz_log_model(d):
            model_first = d
            break
    return CrossoverReport(rows, first, model_first)
