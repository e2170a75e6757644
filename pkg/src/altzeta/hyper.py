"""Beta, Gauss 2F1, and generalized pFq series evaluation.

The pFq path switches to double-double accumulation once the argument is
large enough that alternating-term cancellation eats binary64 (|arg| > 10),
and refuses outright when the cancellation exceeds the ~31-digit budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _classical
from . import ddreal as dd
from .ddreal import ExtReal
from .errors import DomainError, NonConvergence, RegionError
from .result import DEFAULT_TOL, AccelConfig, EvalResult
from .series import alt_series_sum


@dataclass(frozen=True)
class HyperParams:
    upper: tuple = field(default=())
    lower: tuple = field(default=())
    arg: float = 0.0

    def __post_init__(self):
        for c in self.lower:
            if c <= 0 and abs(c - round(c)) < 1e-12:
                raise DomainError("lower parameters must avoid non-positive integers")


def beta_fn(a: float, b: float) -> float:
    """Euler beta from log-gamma differences."""
    if a <= 0 or b <= 0:
        raise DomainError("beta function implemented for a, b > 0")
    return math.exp(
        _classical.loggamma(a) + _classical.loggamma(b) - _classical.loggamma(a + b)
    )


def hyp_2f1(a: float, b: float, c: float, v: float, tol: float = DEFAULT_TOL,
            max_terms: int = 100000) -> EvalResult:
    """Gauss series sum_n (a)_n (b)_n / ((c)_n n!) v^n.

    |v| < 1, or v = 1 when Re(c-a-b) > 0; negative v is summed through the
    alternating-series accelerator.
    """
    if c <= 0 and abs(c - round(c)) < 1e-12:
        raise DomainError("c must not be a non-positive integer")
    if abs(v) >= 1.0 and not (v == 1.0 and c - a - b > 0):
        raise RegionError("need |v| < 1 (or v = 1 with c - a - b > 0)")
    if v == 0.0:
        return EvalResult(1.0, 0.0, "hyp2f1", 1)
    if v < 0.0:
        terms = [1.0]

        def term(n: int) -> float:
            while len(terms) <= n:
                m = len(terms) - 1
                terms.append(
                    terms[-1] * (a + m) * (b + m) / ((c + m) * (m + 1.0)) * (-v)
                )
            return terms[n]

        res = alt_series_sum(term, AccelConfig(target_abs_tol=tol, max_terms=max_terms))
        return EvalResult(res.value, res.err_est, "hyp2f1", res.terms_used)
    total = 1.0
    t = 1.0
    small = 0
    for n in range(max_terms):
        t *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * v
        total += t
        small = small + 1 if abs(t) < tol * (1.0 - min(v, 0.999)) / 2 else 0
        if small >= 3:
            return EvalResult(total, abs(t) / max(1e-300, 1.0 - v), "hyp2f1", n + 1)
    raise NonConvergence("2F1 series did not settle", EvalResult(total, abs(t), "hyp2f1", max_terms))


def hyp_pfq(params: HyperParams, tol: float = DEFAULT_TOL, max_terms: int = 3000) -> EvalResult:
    """Generalized hypergeometric series with running-term recurrence.

    p <= q+1 upper parameters; the series is entire for p <= q.  Alternating
    cancellation at large negative arguments is absorbed by the ExtReal path;
    past ~28 digits of cancellation the evaluation refuses (NonConvergence).
    """
    up, low, z = params.upper, params.lower, params.arg
    if len(up) > len(low) + 1:
        raise DomainError("series diverges: need p <= q+1")
    if z == 0.0:
        return EvalResult(1.0, 0.0, "hyp_pfq", 1)
    if abs(z) <= 10.0:
        total = 1.0
        t = 1.0
        peak = 1.0
        small = 0
        for n in range(max_terms):
            num = 1.0
            for u in up:
                num *= u + n
            den = n + 1.0
            for l in low:
                den *= l + n
            t *= z * num / den
            total += t
            peak = max(peak, abs(t))
            small = small + 1 if abs(t) < tol / 4 else 0
            if small >= 3:
                err = abs(t) + 1e-16 * peak
                return EvalResult(total, err, "hyp_pfq", n + 1)
        raise NonConvergence("pFq series did not settle",
                             EvalResult(total, abs(t), "hyp_pfq", max_terms))
    # ExtReal path for large |z|
    zdd = ExtReal.from_float(z)
    total = dd.DD_ONE
    t = dd.DD_ONE
    peak = 1.0
    small = 0
    for n in range(max_terms):
        num = dd.DD_ONE
        for u in up:
            num = dd.mul(num, ExtReal(u + n))
        den = ExtReal(n + 1.0)
        for l in low:
            den = dd.mul(den, ExtReal(l + n))
        t = dd.mul(t, dd.div(dd.mul(zdd, num), den))
        total = dd.add(total, t)
        mag = abs(float(t))
        peak = max(peak, mag)
        small = small + 1 if mag < tol / 4 else 0
        if small >= 3:
            value = float(total)
            lost = peak / max(abs(value), 1e-300)
            if lost > 1e28:
                raise NonConvergence(
                    f"cancellation {lost:.1e} exceeds the ExtReal budget",
                    EvalResult(value, 1e-31 * peak, "hyp_pfq_dd", n + 1),
                )
            return EvalResult(value, 1e-31 * peak + mag, "hyp_pfq_dd", n + 1)
    raise NonConvergence("pFq series did not settle",
                         EvalResult(float(total), abs(float(t)), "hyp_pfq_dd", max_terms))


def hyp_p_fp1(p: int, c: float, z: float, tol: float = DEFAULT_TOL) -> EvalResult:
    """The family pF(p+1)(1,..,1; 2,..,2,c; z) = sum 1/(n+1)^p * G(c)/G(c+n) * z^n/n!."""
    if p < 1:
        raise DomainError("need p >= 1")
    return hyp_pfq(HyperParams(upper=(1.0,) * p, lower=(2.0,) * p + (c,), arg=z), tol=tol)
