"""The modified Stieltjes constants gamma~_ell(q): the Taylor coefficients of
zeta_E(z, q) at z = 1 with (-1)^ell/ell! normalization.

Every representation is implemented as its own evaluator so they can be
played against each other:

* ``gamma_tilde``            — accelerated limit series (reference);
* ``gamma_tilde_boole``      — finite sum + midpoint + closed-piece tail;
* ``gamma_tilde_integer``    — telescoped pieces, integer q only;
* ``gamma_tilde_shift``      — Taylor shift in q with Stirling weights;
* ``gamma_tilde_qderiv``     — n-th q-derivative via Stirling weights;
* ``gamma_tilde_asymptotic`` — large-q expansion;
* ``gamma_tilde_recurrence`` — the two zeta-recurrence forms;
* ``gamma_tilde_oracle``     — double-double limit series (ground truth).

Cancellation grows like log^ell(n)/n across the summed terms, so binary64
values are honest only while err_est says so (the practical ceiling is around
ell ~ 12, and ~ 25 for the double-double oracle; both paths always report
the observed noise floor).
"""

from __future__ import annotations

import math
from functools import lru_cache

from . import ddreal as dd
from . import kernel
from .combinatorics import stirling_first
from .ddreal import ExtReal
from .errors import DomainError, NonConvergence
from .result import DEFAULT_TOL, ORACLE_TOL, AccelConfig, EvalResult
from .series import alt_series_sum
from .zeta import zeta_e_boole, zeta_e_dz

MAX_ELL_F64 = 40
MAX_ELL_ORACLE = 60


def _check_q(q) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise DomainError(f"shift parameter must be a finite real > 0, got {q}")
    return q


def _check(ell: int, q, cap: int = MAX_ELL_F64) -> float:
    if not isinstance(ell, int) or ell < 0:
        raise DomainError("index ell must be a nonnegative integer")
    if ell > cap:
        raise DomainError(f"index ell capped at {cap} for this path (requested {ell})")
    return _check_q(q)


def _logpow(y: float, k: int) -> float:
    return 1.0 if k == 0 else math.log(y) ** k


def _noise_floor(ell: int, q: float, window: int = 66) -> float:
    # binary64 roundoff against the largest term inside the acceleration window
    peak = max(abs(_logpow(n + q, ell)) / (n + q) for n in range(1, window, 5))
    return 8e-16 * peak


def gamma_tilde(ell: int, q, cfg: AccelConfig | None = None) -> EvalResult:
    """Reference evaluator: accelerated sum of (-1)^n log^ell(n+q)/(n+q).

    The default tolerance autoscales with the intrinsic cancellation of the
    log-power terms, which grows with ell; an explicit cfg overrides it.  At
    the roundoff plateau the strict three-delta detection can stall even
    though the best estimate already meets the tolerance; that estimate is
    then returned with its observed delta as err_est.
    """
    q = _check(ell, q)
    if cfg is None:
        cfg = AccelConfig(target_abs_tol=max(DEFAULT_TOL, _noise_floor(ell, q)))
    skip = 1 if q < 1.0 else 0
    try:
        res = alt_series_sum(lambda n: _logpow(n + q, ell) / (n + q), cfg, skip=skip)
    except NonConvergence as exc:
        # the mini-plateau estimate is honest (its err_est is the observed
        # flanking delta); accept it while it stays near the noise-scaled tol
        if exc.result is not None and exc.result.err_est <= 10.0 * cfg.target_abs_tol:
            res = exc.result
        else:
            raise
    return EvalResult(res.value, res.err_est, "limit_series", res.terms_used)


def gamma_tilde_boole(ell: int, q, alpha: int = 0, tol: float = DEFAULT_TOL) -> EvalResult:
    """Finite sum to alpha, midpoint correction, and the piecewise tail
    integral in closed form (antiderivative of the log-power kernel)."""
    q = _check(ell, q)
    if alpha < 0:
        raise DomainError("alpha must be a nonnegative integer")
    if q < 1.0:
        alpha = max(alpha, 1)

    def g(t: float) -> float:
        return _logpow(t + q, ell) / (t + q)

    head = sum((-1.0) ** n * g(n) for n in range(alpha + 1))
    head -= 0.5 * (-1.0) ** alpha * g(alpha)
    tail = alt_series_sum(
        lambda m: g(alpha + m + 1.0) - g(alpha + m),
        AccelConfig(max_terms=4000, target_abs_tol=tol),
    )
    value = head - 0.5 * (-1.0) ** alpha * tail.value
    return EvalResult(value, tail.err_est, "boole_pieces", tail.terms_used + alpha + 1)


def gamma_tilde_integer(ell: int, q, tol: float = DEFAULT_TOL) -> EvalResult:
    """Telescoped closed-piece form, defined for positive integer q."""
    qf = float(q)
    if abs(qf - round(qf)) > 1e-12 or round(qf) < 1:
        raise DomainError(f"integer-q form needs q in {{1, 2, ...}}, got {q}")
    qi = int(round(qf))
    _check(ell, qf)

    def h(y: float) -> float:
        return _logpow(y, ell) / y

    tail = alt_series_sum(
        lambda m: h(qi + m + 1.0) - h(qi + m),
        AccelConfig(max_terms=4000, target_abs_tol=tol),
    )
    value = _logpow(qi, ell) / (2.0 * qi) - 0.5 * tail.value
    return EvalResult(value, tail.err_est, "integer_pieces", tail.terms_used)


def gamma_tilde_shift(ell: int, q, x: float, j_max: int = 60, tol: float = DEFAULT_TOL) -> EvalResult:
    """gamma~_ell(q+x) from gamma~_ell(q) plus the Stirling-weighted double sum
    over z-derivatives of zeta_E(j, q)."""
    q = _check(ell, q)
    x = float(x)
    if abs(x) >= q:
        raise DomainError(f"shift needs |x| < q, got x={x}, q={q}")
    base = gamma_tilde(ell, q, AccelConfig(target_abs_tol=tol))
    total = base.value
    err = base.err_est
    if x == 0.0:
        return EvalResult(total, err, "shift_series", base.terms_used)
    binom = [math.comb(ell, k) for k in range(ell + 1)]
    terms = 0
    last = math.inf
    small = 0
    xpow = 1.0  # x^(j-1)/(j-1)!
    for j in range(2, j_max + 2):
        xpow *= x / (j - 1) if j > 2 else x / 1.0
        inner = 0.0
        inner_err = 0.0
        for k in range(ell + 1):
            s = stirling_first(j, k + 1)
            if s == 0:
                continue
            dz = _dz_cached(ell - k, j, q, tol / 10.0)
            w = binom[k] * (-1.0) ** k * math.factorial(k) * s
            inner += w * dz.value
            inner_err += abs(w) * dz.err_est
        t = xpow * inner
        total += (-1.0) ** ell * t
        err += abs(xpow) * inner_err
        terms = j
        last = abs(t)
        small = small + 1 if last < tol / 4.0 else 0
        if small >= 3:
            break
    else:
        raise NonConvergence(
            f"shift series still moving by {last:g} at j_max={j_max}",
            EvalResult(total, last, "shift_series", terms),
        )
    rho = abs(x) / q
    err += last * rho / (1.0 - rho) * 10.0  # ratio-test tail, safety factor 10
    return EvalResult(total, err, "shift_series", terms)


@lru_cache(maxsize=100000)
def _dz_cached(j: int, s: float, q: float, tol: float) -> EvalResult:
    return zeta_e_dz(j, float(s), q, tol=tol)


def gamma_tilde_qderiv(ell: int, n: int, q, tol: float = DEFAULT_TOL) -> EvalResult:
    """n-th derivative of gamma~_ell in the shift parameter (n >= 1)."""
    q = _check(ell, q)
    if not isinstance(n, int) or n < 1:
        raise DomainError("derivative order n must be an integer >= 1")
    total = 0.0
    err = 0.0
    terms = 0
    for k in range(ell + 1):
        s = stirling_first(n + 1, k + 1)
        if s == 0:
            continue
        dz = _dz_cached(ell - k, n + 1.0, q, tol / 10.0)
        w = (-1.0) ** k * math.factorial(k) * math.comb(ell, k) * s
        total += w * dz.value
        err += abs(w) * dz.err_est
        terms += dz.terms_used
    total *= (-1.0) ** ell
    return EvalResult(total, err, "qderiv", terms)


def gamma_tilde_asymptotic(ell: int, q, k_max: int = 10) -> EvalResult:
    """Large-q expansion with exact Euler-polynomial and Stirling weights."""
    from .combinatorics import euler_poly_zero

    q = _check(ell, q)
    if q < 10.0:
        raise DomainError(f"asymptotic form enforced for q >= 10, got {q}")
    if not 1 <= k_max <= 31:
        raise DomainError("k_max must lie in 1..31")
    lq = math.log(q)
    value = _logpow(q, ell) / (2.0 * q)
    value -= (ell * _logpow(q, ell - 1) - _logpow(q, ell)) / (4.0 * q * q) if ell >= 1 else (
        -1.0 / (4.0 * q * q)
    )

    def series_term(k: int) -> float:
        e = float(euler_poly_zero(2 * k + 1))
        inner = sum(
            math.comb(ell, j)
            * math.factorial(j)
            * stirling_first(2 * k + 2, j + 1)
            * _logpow(q, ell - j)
            for j in range(ell + 1)
        )
        return e / (2.0 * q ** (2 * k + 2) * math.factorial(2 * k + 1)) * inner

    for k in range(1, k_max + 1):
        value += series_term(k)
    err = abs(series_term(k_max + 1)) if 2 * (k_max + 1) + 2 <= 64 else abs(series_term(k_max))
    return EvalResult(value, err, "asymptotic", k_max)


def gamma_tilde_recurrence(variant: int, ell: int, q, tol: float = DEFAULT_TOL, k_cap: int = 62) -> EvalResult:
    """Closed log-difference leading term plus the Stirling-weighted series in
    z-derivatives of zeta_E(k+1, q); variant 1 needs q > 2, variant 2 q > 1."""
    q = _check(ell, q)
    if variant not in (1, 2):
        raise DomainError("variant must be 1 or 2")
    if variant == 1 and q <= 2.0:
        raise DomainError(f"variant 1 needs q > 2, got {q}")
    if variant == 2 and q <= 1.0:
        raise DomainError(f"variant 2 needs q > 1, got {q}")
    if variant == 1:
        lead = (_logpow(q - 1.0, ell + 1) - _logpow(q - 2.0, ell + 1)) / (2.0 * (ell + 1))
        ratio = 2.0 / q
    else:
        lead = (_logpow(q, ell + 1) - _logpow(q - 1.0, ell + 1)) / (2.0 * (ell + 1))
        ratio = 1.0 / (q * q)
    total = lead
    err = 0.0
    fact_ell = math.factorial(ell)
    small = 0
    last = math.inf
    terms = 0
    for k in range(1, k_cap + 1):
        arg = k + 1 if variant == 1 else 2 * k + 1
        if arg + 1 > 64:
            break
        if variant == 1:
            outer = (-1.0) ** k * 2.0 ** k / math.factorial(k + 1)
        else:
            outer = 1.0 / math.factorial(2 * k + 1)
        inner = 0.0
        inner_err = 0.0
        for j in range(ell + 1):
            s = stirling_first(arg, ell - j + 1)
            if s == 0:
                continue
            dz = _dz_cached(j, float(arg), q, tol / 10.0)
            w = (-1.0) ** j / math.factorial(j) * s
            inner += w * dz.value
            inner_err += abs(w) * dz.err_est
        t = fact_ell * outer * inner
        total -= t
        err += fact_ell * abs(outer) * inner_err
        terms = k
        last = abs(t)
        small = small + 1 if last < tol / 4.0 else 0
        if small >= 3:
            break
    err += last * ratio / (1.0 - ratio)
    return EvalResult(total, err, f"recurrence_v{variant}", terms)


# -- ExtReal oracle ------------------------------------------------------


def _oracle_n_terms(ell: int) -> int:
    return min(kernel.CVZ_MAX_TERMS, 130 + 4 * ell)


@lru_cache(maxsize=4096)
def _oracle_cached(ell: int, q_hi: float, q_lo: float) -> tuple:
    qdd = ExtReal(q_hi, q_lo)
    skip = 1 if q_hi < 1.0 else 0
    n = _oracle_n_terms(ell)
    head = dd.DD_ZERO
    if skip:
        y = qdd
        u = dd.log(y)
        head = dd.div(dd.powi(u, ell) if ell else dd.DD_ONE, y)
    v1 = kernel.dd_powlog_sum(ell, qdd, 1, skip, n)
    v2 = kernel.dd_powlog_sum(ell, qdd, 1, skip, n - 16)
    if skip:
        v1, v2 = dd.add(head, -v1), dd.add(head, -v2)
    delta = abs(float(dd.add(v1, -v2)))
    # noise floor: dd roundoff against the largest term magnitude in the sum
    peak = max(
        abs(_logpow(skip + q_hi, ell) / (skip + q_hi)),
        abs(_logpow(n + q_hi, ell) / (n + q_hi)),
    )
    err = max(delta, 1e-31 * peak)
    return v1, err


def gamma_tilde_oracle(ell: int, q) -> tuple[ExtReal, float]:
    """Double-double value of gamma~_ell(q) and its honest error estimate."""
    q = _check(ell, q, cap=MAX_ELL_ORACLE)
    qdd = ExtReal.from_float(q)
    return _oracle_cached(ell, qdd.hi, qdd.lo)


@lru_cache(maxsize=256)
def gamma_tilde_oracle_table(q_key: float, max_ell: int) -> tuple:
    """ExtReal values gamma~_0..max_ell(q) sharing one accelerated pass."""
    q = _check_q(q_key)
    if max_ell > MAX_ELL_ORACLE:
        raise DomainError(f"oracle table capped at ell = {MAX_ELL_ORACLE}")
    qdd = ExtReal.from_float(q)
    skip = 1 if q < 1.0 else 0
    n = _oracle_n_terms(max_ell)
    vals = kernel.dd_powlog_table(max_ell, qdd, skip, n)
    if skip:
        u = dd.log(qdd)
        head_pow = dd.div(dd.DD_ONE, qdd)
        out = []
        for ell in range(max_ell + 1):
            out.append(dd.add(head_pow, -vals[ell]))
            head_pow = dd.mul(head_pow, u) if ell < max_ell else head_pow
        vals = out
    return tuple(vals)


MOD_EULER_CONSTANT: ExtReal = None  # set lazily below


def mod_euler_constant() -> ExtReal:
    """gamma~_0(1) = log 2 computed once by the oracle (module constant)."""
    global MOD_EULER_CONSTANT
    if MOD_EULER_CONSTANT is None:
        MOD_EULER_CONSTANT = gamma_tilde_oracle(0, 1.0)[0]
    return MOD_EULER_CONSTANT


# -- tables ---------------------------------------------------------------


def stieltjes_table(q, max_index: int, oracle: bool = False):
    """Rows (ell, value, err_est); oracle rows carry 25-digit ExtReal values."""
    cap = MAX_ELL_ORACLE if oracle else MAX_ELL_F64
    q = _check_q(q)
    if max_index < 0 or max_index > cap:
        raise DomainError(f"max_index must lie in 0..{cap} for this mode")
    rows = []
    if oracle:
        vals = gamma_tilde_oracle_table(q, max_index)
        n = _oracle_n_terms(max_index)
        for ell, v in enumerate(vals):
            peak = abs(_logpow(n + q, ell) / (n + q))
            rows.append((ell, v, 1e-31 * max(peak, abs(float(v)))))
    else:
        for ell in range(max_index + 1):
            try:
                r = gamma_tilde(ell, q)
                rows.append((ell, r.value, r.err_est))
            except NonConvergence as exc:
                rows.append((ell, exc.result.value, exc.result.err_est))
    return rows
