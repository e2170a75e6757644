"""Exact combinatorial tables: Stirling numbers, Euler polynomials,
Pochhammer derivatives at 1, Bernoulli numbers, the sign function of the
0-th quasi-periodic Euler function.

Tables are exact rationals/integers and are capped at order 64; silently
overflowing floats would corrupt identity residuals, so larger requests are
refused.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

MAX_ORDER = 64

RationalExact = Fraction


def _check_order(n: int):
    if n > MAX_ORDER:
        raise DomainError(f"exact tables are capped at order {MAX_ORDER} (requested {n})")
    if n < 0:
        raise DomainError("order must be nonnegative")


@lru_cache(maxsize=None)
def _stirling_first_row(n: int) -> tuple:
    # signed s(n, k): s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
    if n == 0:
        return (1,)
    prev = _stirling_first_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = prev[k - 1] - (n - 1) * (prev[k] if k < n else 0)
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    _check_order(n)
    if k < 0 or k > n:
        return 0
    return _stirling_first_row(n)[k]


@lru_cache(maxsize=None)
def _stirling_second_row(k: int) -> tuple:
    # S(k, j) = j S(k-1, j) + S(k-1, j-1)
    if k == 0:
        return (1,)
    prev = _stirling_second_row(k - 1)
    row = [0] * (k + 1)
    for j in range(1, k + 1):
        row[j] = j * (prev[j] if j < k else 0) + prev[j - 1]
    return tuple(row)


def stirling_second(k: int, j: int) -> int:
    """Stirling number of the second kind S(k, j)."""
    _check_order(k)
    if j < 0 or j > k:
        return 0
    return _stirling_second_row(k)[j]


def ordered_bell(k: int) -> int:
    """sum_j S(k, j) j! — the number of ordered set partitions."""
    return sum(stirling_second(k, j) * math.factorial(j) for j in range(k + 1))


@lru_cache(maxsize=None)
def euler_poly_zero(n: int) -> Fraction:
    """Exact E_n(0).  E_0(0)=1; 2 E_n(0) = -sum_{k<n} C(n,k) E_k(0) for n >= 1."""
    _check_order(n)
    if n == 0:
        return Fraction(1)
    s = sum(Fraction(math.comb(n, k)) * euler_poly_zero(k) for k in range(n))
    return -s / 2


def euler_poly(n: int, x: float) -> float:
    """E_n(x) from the binomial expansion over exact E_k(0)."""
    _check_order(n)
    acc = Fraction(0)
    xf = Fraction(x).limit_denominator(10**15) if isinstance(x, Fraction) else None
    if xf is not None:
        for k in range(n + 1):
            acc += math.comb(n, k) * euler_poly_zero(k) * xf ** (n - k)
        return acc
    total = 0.0
    for k in range(n + 1):
        total += math.comb(n, k) * float(euler_poly_zero(k)) * x ** (n - k)
    return total


def periodic_euler0(t: float) -> int:
    """(-1)^floor(t): the 0-th quasi-periodic Euler function, half-open convention."""
    return 1 if math.floor(t) % 2 == 0 else -1


def pochhammer(z, j: int):
    """(z)_j = z (z+1) ... (z+j-1); complex arguments welcome."""
    if j < 0:
        raise DomainError("pochhammer order must be nonnegative")
    acc = 1.0 if not isinstance(z, complex) else 1.0 + 0j
    for i in range(j):
        acc *= z + i
    return acc


def pochhammer_deriv(j: int, k: int) -> int:
    """Exact value of d^k/dz^k (z)_j at z = 1, i.e. (-1)^(k+j) k! s(j+1, k+1)."""
    if j < 0 or k < 0:
        raise DomainError("indices must be nonnegative")
    if j == 0:
        return 1 if k == 0 else 0
    if k > j:
        return 0
    return (-1) ** (k + j) * math.factorial(k) * stirling_first(j + 1, k + 1)


@lru_cache(maxsize=None)
def _bernoulli(m: int) -> Fraction:
    # sum_{j=0}^{m} C(m+1, j) B_j = 0, B_0 = 1 (B_1 = -1/2)
    if m == 0:
        return Fraction(1)
    s = sum(Fraction(math.comb(m + 1, j)) * _bernoulli(j) for j in range(m))
    return -s / (m + 1)


def bernoulli_even(k: int) -> Fraction:
    """Exact B_{2k}, k >= 1."""
    if k < 1 or not isinstance(k, int):
        raise DomainError("bernoulli_even expects an integer k >= 1")
    _check_order(2 * k)
    return _bernoulli(2 * k)


def bernoulli_number(m: int) -> Fraction:
    """Exact B_m for even m (and B_0, B_1); odd m >= 3 is refused as unused."""
    if m < 0:
        raise DomainError("index must be nonnegative")
    if m >= 3 and m % 2 == 1:
        raise DomainError("odd Bernoulli numbers beyond B_1 vanish; request refused")
    _check_order(m)
    return _bernoulli(m)
