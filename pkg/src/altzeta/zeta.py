"""Evaluators for the alternating Hurwitz zeta function zeta_E(z, q).

zeta_E(z, q) = sum_{n>=0} (-1)^n (n+q)^(-z), entire in z for q > 0.  Several
mutually independent methods are provided so results can be cross-validated:

* ``direct_accel`` — accelerated defining series, Re z > 0;
* ``boole``        — reference continuation on Re z > -1: finite sum,
                     midpoint correction, and a tail of closed-form
                     unit-interval pieces summed as an alternating series;
* ``fourier``      — trigonometric expansion, Re z < 1 (integer shift
                     parameters only below Re z = 0, where the phase stops
                     oscillating);
* ``asymptotic``   — large-q expansion with exact Euler-polynomial weights;
* ``lemma1_v1/v2`` — recurrences pulling the value from zeta_E(z+k, q);
* ``wilton``       — Taylor shift in the q argument;
* ``mellin_quad``  — quadrature of the Mellin integral, Re z > 0.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._classical import loggamma
from .combinatorics import euler_poly_zero
from .errors import DomainError, NonConvergence, RegionError
from .quadrature import integrate_adaptive
from .result import DEFAULT_TOL, AccelConfig, EvalResult
from .series import alt_series_sum

METHODS = (
    "auto",
    "direct_accel",
    "boole",
    "fourier",
    "asymptotic",
    "lemma1_v1",
    "lemma1_v2",
    "wilton",
    "mellin_quad",
)

_INT_EPS = 1e-12


def _check_q(q: float) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise DomainError(f"shift parameter must be a finite real > 0, got {q}")
    return q


def _is_complex_arg(z) -> bool:
    return isinstance(z, complex) and z.imag != 0.0


def _as_complex(z) -> complex:
    zc = complex(z)
    if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
        raise DomainError("z must have finite components")
    return zc


def _rpow(base: float, expo: complex):
    """base**expo for base > 0, staying real when the exponent is real."""
    if expo.imag == 0.0:
        return base ** expo.real
    return cmath.exp(expo * math.log(base))


def _narrow(value, want_complex: bool):
    if want_complex:
        return complex(value)
    return value.real if isinstance(value, complex) else value


def zeta_e_boole(z, q, alpha: int = 0, tol: float = DEFAULT_TOL, max_terms: int = 4000) -> EvalResult:
    """Reference continuation for Re z > -1 (the closed pieces cancel the z
    factor, so z = 0 needs no special case)."""
    q = _check_q(q)
    zc = _as_complex(z)
    if zc.real <= -1.0:
        raise RegionError(f"boole path needs Re z > -1, got {zc.real}")
    if alpha < 0:
        raise DomainError("alpha must be a nonnegative integer")
    cplx = _is_complex_arg(z)
    head = 0.0 + 0.0j
    for n in range(alpha + 1):
        head += (-1.0) ** n * _rpow(n + q, -zc)
    head -= 0.5 * (-1.0) ** alpha * _rpow(alpha + q, -zc)

    def piece(m: int):
        y = alpha + m + q
        return _rpow(y, -zc) - _rpow(y + 1.0, -zc)

    tail = alt_series_sum(piece, AccelConfig(max_terms=max_terms, target_abs_tol=tol))
    value = head + 0.5 * (-1.0) ** alpha * tail.value
    return EvalResult(_narrow(value, cplx), tail.err_est, "boole", tail.terms_used + alpha + 1)


def zeta_e_direct(z, q, tol: float = DEFAULT_TOL, max_terms: int = 4000) -> EvalResult:
    q = _check_q(q)
    zc = _as_complex(z)
    if zc.real <= 0.0:
        raise RegionError(f"direct series needs Re z > 0, got {zc.real}")
    cplx = _is_complex_arg(z)
    res = alt_series_sum(
        lambda n: _rpow(n + q, -zc), AccelConfig(max_terms=max_terms, target_abs_tol=tol)
    )
    return EvalResult(_narrow(res.value, cplx), res.err_est, "direct_accel", res.terms_used)


def zeta_e_fourier(z, q, n_terms: int = 20000, tol: float = DEFAULT_TOL) -> EvalResult:
    """Trigonometric expansion, valid for Re z < 1.

    The sine series is 2-periodic in q and represents zeta_E only on
    0 < q <= 1 (for larger q it contradicts the difference equation), so q is
    first reduced into that strip by exact difference-equation steps.  For
    integer q the phase is constant in n: the series converges (to the right
    value) only for Re z < 0, so Re z >= 0 is refused there.  Half-odd q makes
    the series exactly alternating and it is accelerated instead of truncated.
    """
    q = _check_q(q)
    zc = _as_complex(z)
    if zc.real >= 1.0:
        raise RegionError(f"fourier expansion needs Re z < 1, got {zc.real}")
    cplx = _is_complex_arg(z)
    if q > 1.0:
        steps = math.ceil(q - 1.0 - 1e-12)
        base = zeta_e_fourier(z, q - steps, n_terms=n_terms, tol=tol)
        value = complex(base.value)
        err = base.err_est
        # zeta_E(z, q) = -zeta_E(z, q-1) + (q-1)^(-z), applied upward
        for j in range(steps - 1, -1, -1):
            value = _rpow(q - j - 1.0, -zc) - value
            err += 2e-16 * abs(_rpow(q - j - 1.0, -zc))
        return EvalResult(_narrow(value, cplx), err, "fourier", base.terms_used + steps)
    pref = 2.0 * cmath.exp(loggamma(1.0 - zc)) * _rpow(math.pi, zc - 1.0)
    q_int = abs(q - round(q)) < _INT_EPS
    q_halfodd = not q_int and abs(2 * q - round(2 * q)) < _INT_EPS

    if q_halfodd:
        phase0 = math.pi * q + 0.5 * math.pi * zc
        s0 = cmath.sin(phase0) if cplx else math.sin(phase0.real if cplx else math.pi * q + 0.5 * math.pi * zc.real)
        res = alt_series_sum(
            lambda n: _rpow(2 * n + 1, zc - 1.0),
            AccelConfig(max_terms=min(n_terms, 4000), target_abs_tol=tol),
        )
        value = pref * s0 * res.value
        err = abs(pref) * abs(s0) * res.err_est
        return EvalResult(_narrow(value, cplx), err, "fourier", res.terms_used)

    if q_int and zc.real >= 0.0:
        raise RegionError("fourier expansion at integer q converges only for Re z < 0")

    n = np.arange(n_terms, dtype=np.float64)
    odd = 2.0 * n + 1.0
    phase = math.pi * q * odd + 0.5 * math.pi * zc
    total = np.sin(phase) * np.exp((zc - 1.0) * np.log(odd))
    s = complex(np.sum(total))
    if q_int:
        # absolutely convergent: integral tail bound
        tail = (2.0 * n_terms + 1.0) ** zc.real / (2.0 * abs(zc.real))
    else:
        tail = (
            2.0
            / abs(math.sin(math.pi * (q - math.floor(q))))
            * (2.0 * n_terms + 1.0) ** (zc.real - 1.0)
            * (1.0 + 0.5 * abs(zc.imag))
        )
    value = pref * s
    return EvalResult(_narrow(value, cplx), abs(pref) * tail, "fourier", n_terms)


def zeta_e_asymptotic(z, q, k_max: int = 15) -> EvalResult:
    """Large-q expansion; only odd Euler indices contribute (E_{2k}(0) = 0)."""
    q = _check_q(q)
    zc = _as_complex(z)
    if q < 10.0:
        raise DomainError(f"asymptotic expansion enforced for q >= 10, got {q}")
    if not 0 <= k_max <= 30:
        raise DomainError("k_max must lie in 0..30")
    cplx = _is_complex_arg(z)
    value = 0.5 * _rpow(q, -zc) + 0.25 * zc * _rpow(q, -zc - 1.0)
    poch = zc * (zc + 1.0)  # (z)_2
    for k in range(2, k_max + 1):
        e_k = euler_poly_zero(k)
        if e_k != 0:
            value -= 0.5 * float(e_k) / math.factorial(k) * poch * _rpow(q, -zc - k)
        poch *= zc + k
    k_next = k_max + 1 if (k_max + 1) % 2 == 1 else k_max + 2
    k_next = max(k_next, 3)
    poch_next = 1.0 + 0.0j
    for i in range(k_next):
        poch_next *= zc + i
    err = abs(
        0.5 * float(euler_poly_zero(k_next)) / math.factorial(k_next) * poch_next * _rpow(q, -zc - k_next)
    )
    return EvalResult(_narrow(value, cplx), err, "asymptotic", k_max)


def zeta_e_lemma1(variant: int, z, q, tol: float = DEFAULT_TOL, k_cap: int = 400) -> EvalResult:
    """Recurrences expressing zeta_E(z, q) through zeta_E(z+k, q)."""
    q = _check_q(q)
    zc = _as_complex(z)
    if variant not in (1, 2):
        raise DomainError("variant must be 1 or 2")
    if variant == 1 and q <= 2.0:
        raise DomainError(f"variant 1 needs q > 2, got {q}")
    if variant == 2 and q <= 1.0:
        raise DomainError(f"variant 2 needs q > 1, got {q}")
    if zc.real <= 0.0:
        raise RegionError("recurrence needs Re z > 0")
    if abs(zc - 1.0) < 1e-9:
        raise RegionError("z = 1 excluded by the (z-1) denominator")
    cplx = _is_complex_arg(z)
    if variant == 1:
        lead = (_rpow(q - 2.0, 1.0 - zc) - _rpow(q - 1.0, 1.0 - zc)) / (2.0 * (zc - 1.0))
        ratio = 2.0 / q
    else:
        lead = (_rpow(q - 1.0, 1.0 - zc) - _rpow(q, 1.0 - zc)) / (2.0 * (zc - 1.0))
        ratio = 1.0 / (q * q)
    total = lead
    err = 0.0
    coeff = 1.0 + 0.0j
    inner_tol = tol / 10.0
    small = 0
    terms = 0
    last = math.inf
    for k in range(1, k_cap + 1):
        if variant == 1:
            coeff *= 2.0 * (zc + k - 1.0) / (k + 1.0)
            s_arg = zc + k
        else:
            coeff *= (zc + 2 * k - 2.0) * (zc + 2 * k - 1.0) / ((2.0 * k) * (2.0 * k + 1.0))
            s_arg = zc + 2.0 * k
        inner = zeta_e_boole(s_arg if cplx else s_arg.real, q, tol=inner_tol)
        t = coeff * complex(inner.value)
        total -= t
        err += abs(coeff) * inner.err_est
        terms = k
        last = abs(t)
        small = small + 1 if last < tol / 4.0 else 0
        if small >= 3:
            break
    else:
        raise NonConvergence(
            f"recurrence tail still {last:g} after {k_cap} terms",
            EvalResult(_narrow(total, cplx), last, f"lemma1_v{variant}", terms),
        )
    err += last * ratio / (1.0 - ratio)
    return EvalResult(_narrow(total, cplx), err, f"lemma1_v{variant}", terms)


def wilton_shift(z, q, x: float, j_max: int = 60, tol: float = DEFAULT_TOL) -> EvalResult:
    """zeta_E(z, q+x) rebuilt from zeta_E(z+j, q), j = 0..j_max."""
    q = _check_q(q)
    x = float(x)
    if abs(x) >= q:
        raise DomainError(f"shift needs |x| < q, got x={x}, q={q}")
    zc = _as_complex(z)
    if zc.real <= 0.0:
        raise RegionError("shift formula needs Re z > 0")
    cplx = _is_complex_arg(z)
    base = zeta_e_boole(z, q, tol=tol)
    total = complex(base.value)
    err = base.err_est
    if x == 0.0:
        return EvalResult(_narrow(total, cplx), err, "wilton", base.terms_used)
    coeff = 1.0 + 0.0j
    small = 0
    last = math.inf
    terms = 0
    for j in range(1, j_max + 1):
        coeff *= (zc + j - 1.0) / j * (-x)
        inner = zeta_e_boole(zc + j if cplx else zc.real + j, q, tol=tol / 10.0)
        t = coeff * complex(inner.value)
        total += t
        err += abs(coeff) * inner.err_est
        terms = j
        last = abs(t)
        small = small + 1 if last < tol / 4.0 else 0
        if small >= 3:
            break
    rho = abs(x) / q
    err += last * rho / (1.0 - rho)
    return EvalResult(_narrow(total, cplx), err, "wilton", terms)


def zeta_e_mellin_quad(z, q, tol: float = 1e-11) -> EvalResult:
    """Quadrature of the Mellin-transform integral, Re z > 0."""
    q = _check_q(q)
    zc = _as_complex(z)
    if zc.real <= 0.0:
        raise RegionError("Mellin integral needs Re z > 0")
    cplx = _is_complex_arg(z)
    a = zc.real
    b = zc.imag
    gamma_z = cmath.exp(loggamma(zc)) if cplx else math.exp(loggamma(a))

    def envelope(t: float) -> float:
        # e^{-(q-1)t}/(e^t+1) rewritten to avoid overflow at large t
        return math.exp(-q * t) / (1.0 + math.exp(-t))

    def f_re(t: float) -> float:
        w = envelope(t) * t ** (a - 1.0)
        return w * math.cos(b * math.log(t)) if b else w

    parts = []
    errs = 0.0
    neval = 0
    for f in ((f_re,) if not cplx else (f_re, lambda t: envelope(t) * t ** (a - 1.0) * math.sin(b * math.log(t)))):
        r1 = integrate_adaptive(f, 0.0, 1.0, tol=tol / 2)
        r2 = integrate_adaptive(f, 1.0, math.inf, tol=tol / 2)
        parts.append(r1.value + r2.value)
        errs += r1.err_est + r2.err_est
        neval += r1.terms_used + r2.terms_used
    integral = parts[0] + 1j * parts[1] if cplx else parts[0]
    value = integral / gamma_z
    err = errs / abs(gamma_z) + 1e-16 * abs(value)
    return EvalResult(_narrow(value, cplx), err, "mellin_quad", neval)


_DISPATCH = {
    "direct_accel": lambda z, q, tol: zeta_e_direct(z, q, tol=tol),
    "boole": lambda z, q, tol: zeta_e_boole(z, q, tol=tol),
    "fourier": lambda z, q, tol: zeta_e_fourier(z, q, tol=tol),
    "asymptotic": lambda z, q, tol: zeta_e_asymptotic(z, q),
    "lemma1_v1": lambda z, q, tol: zeta_e_lemma1(1, z, q, tol=tol),
    "lemma1_v2": lambda z, q, tol: zeta_e_lemma1(2, z, q, tol=tol),
    "wilton": lambda z, q, tol: wilton_shift(z, q, 0.0, tol=tol),
    "mellin_quad": lambda z, q, tol: zeta_e_mellin_quad(z, q),
}


def zeta_e(z, q, method: str = "auto", tol: float = DEFAULT_TOL) -> EvalResult:
    """Evaluate zeta_E(z, q) with the selected method ('auto' picks by region)."""
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; choose from {METHODS}")
    if method == "auto":
        zc = _as_complex(z)
        _check_q(q)
        if zc.real > -1.0:
            return zeta_e_boole(z, q, tol=tol)
        return zeta_e_fourier(z, q, n_terms=50000, tol=tol)
    return _DISPATCH[method](z, q, tol)


def zeta_e_dz(j: int, z, q, tol: float = DEFAULT_TOL, max_terms: int = 4000) -> EvalResult:
    """j-th z-derivative of zeta_E at (z, q), Re z > 0 (accelerated series)."""
    q = _check_q(q)
    if j < 0:
        raise DomainError("derivative order must be nonnegative")
    zc = _as_complex(z)
    if zc.real <= 0.0:
        raise RegionError("derivative series needs Re z > 0")
    if j == 0:
        return zeta_e_boole(z, q, tol=tol)
    cplx = _is_complex_arg(z)
    skip = 1 if q < 1.0 else 0

    def term(n: int):
        return math.log(n + q) ** j * _rpow(n + q, -zc)

    res = alt_series_sum(term, AccelConfig(max_terms=max_terms, target_abs_tol=tol, skip=skip))
    value = (-1.0) ** j * res.value
    return EvalResult(_narrow(value, cplx), res.err_est, "dz_series", res.terms_used)


def zeta_e_dz0(n: int, q, alpha: int = 0, tol: float = DEFAULT_TOL) -> EvalResult:
    """n-th z-derivative at z = 0, through the term-wise differentiated
    closed-piece representation."""
    q = _check_q(q)
    if n < 0:
        raise DomainError("derivative order must be nonnegative")
    if n == 0:
        return EvalResult(0.5, 0.0, "dz0_series", 1)
    if q < 1.0:
        alpha = max(alpha, 1)

    def lg(t: float) -> float:
        return math.log(t + q) ** n

    head = 0.0
    for m in range(alpha + 1):
        head += (-1.0) ** m * lg(m)
    head -= 0.5 * (-1.0) ** alpha * lg(alpha)
    tail = alt_series_sum(
        lambda m: lg(alpha + m) - lg(alpha + m + 1.0),
        AccelConfig(max_terms=6000, target_abs_tol=tol),
    )
    value = (-1.0) ** n * (head + 0.5 * (-1.0) ** alpha * tail.value)
    return EvalResult(value, tail.err_est, "dz0_series", tail.terms_used + alpha + 1)


def eta(z, tol: float = DEFAULT_TOL) -> EvalResult:
    """Dirichlet eta: zeta_E(z, 1)."""
    return zeta_e(z, 1.0, "auto", tol=tol)


def _asymptotic_descend(z, q, k_max: int = 15, q_floor: float = 30.0) -> EvalResult:
    """Cross-check evaluator valid for any z: large-shift expansion stepped
    back down with the difference equation.  Independent of the boole,
    fourier and direct paths; used by the verification suite."""
    q = _check_q(q)
    zc = _as_complex(z)
    cplx = _is_complex_arg(z)
    n = max(0, math.ceil(q_floor - q))
    res = zeta_e_asymptotic(zc if cplx else zc.real, q + n, k_max=k_max)
    value = complex(res.value)
    err = res.err_est
    for j in range(n - 1, -1, -1):
        value = _rpow(q + j, -zc) - value
        err += 2e-16 * abs(_rpow(q + j, -zc))
    return EvalResult(_narrow(value, cplx), err, "asymptotic_descend", res.terms_used + n)
