"""Pure-Python summation kernels (fallback twin of the compiled extension).

Two hot loops live here: Chebyshev-polynomial convergence acceleration of
alternating series (weights cached per term count) and the double-double
alternating power-log series that backs every ExtReal oracle value.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import ddreal as dd
from .ddreal import ExtReal

BACKEND = "python"

# Above this the acceleration coefficients overflow binary64 exponents;
# 360 terms already carry far more digits than either precision target.
CVZ_MAX_TERMS = 360


@lru_cache(maxsize=None)
def _cvz_weights_f64(n: int) -> np.ndarray:
    d = (3.0 + np.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    w = np.empty(n)
    for k in range(n):
        c = b - c
        w[k] = c / d
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return w


def cvz_sum_f64(a, n: int) -> float:
    """Accelerated value of sum_k (-1)^k a_k from the first n terms (a_k real)."""
    w = _cvz_weights_f64(n)
    return float(np.dot(w, np.asarray(a[:n], dtype=np.float64)))


def cvz_sum_c128(a, n: int) -> complex:
    w = _cvz_weights_f64(n)
    return complex(np.dot(w, np.asarray(a[:n], dtype=np.complex128)))


@lru_cache(maxsize=64)
def _cvz_weights_dd(n: int) -> tuple:
    d = dd.powi(dd.add(ExtReal(3.0), dd.sqrt(ExtReal(8.0))), n)
    d = dd.mul(dd.add(d, dd.div(dd.DD_ONE, d)), ExtReal(0.5))
    b = ExtReal(-1.0)
    c = -d
    w = []
    for k in range(n):
        c = dd.add(b, -c)
        w.append(dd.div(c, d))
        num = ExtReal(float((k + n) * (k - n)))
        den = ExtReal((k + 0.5) * (k + 1.0))
        b = dd.div(dd.mul(num, b), den)
    return tuple(w)


def dd_alt_sum(terms, n: int) -> ExtReal:
    """Accelerated sum_k (-1)^k terms[k] in double-double arithmetic."""
    w = _cvz_weights_dd(n)
    acc = dd.DD_ZERO
    for k in range(n):
        acc = dd.add(acc, dd.mul(w[k], terms[k]))
    return acc


def dd_powlog_terms(ell: int, q: ExtReal, s, start: int, count: int) -> list:
    """Terms log^ell(m+q)/(m+q)^s for m = start .. start+count-1, in dd.

    s may be a positive int (fast reciprocal-power path) or an ExtReal.
    """
    out = []
    int_s = isinstance(s, int)
    for m in range(start, start + count):
        y = dd.add(ExtReal(float(m)), q)
        if ell > 0 or not int_s:
            u = dd.log(y)
        if int_s:
            denom = dd.powi(y, s)
        else:
            denom = dd.exp(dd.mul(s, u))
        num = dd.powi(u, ell) if ell > 0 else dd.DD_ONE
        out.append(dd.div(num, denom))
    return out


def dd_powlog_sum(ell: int, q: ExtReal, s, start: int, n: int) -> ExtReal:
    return dd_alt_sum(dd_powlog_terms(ell, q, s, start, n), n)


def dd_powlog_table(L: int, q: ExtReal, start: int, n: int) -> list:
    """Accelerated sums for ell = 0..L at s = 1, sharing one pass of logs."""
    w = _cvz_weights_dd(n)
    acc = [dd.DD_ZERO] * (L + 1)
    for m in range(n):
        y = dd.add(ExtReal(float(m + start)), q)
        inv = dd.div(dd.DD_ONE, y)
        u = dd.log(y) if L > 0 else dd.DD_ONE
        t = inv
        acc[0] = dd.add(acc[0], dd.mul(w[m], t))
        for ell in range(1, L + 1):
            t = dd.mul(t, u)
            acc[ell] = dd.add(acc[ell], dd.mul(w[m], t))
    return acc
