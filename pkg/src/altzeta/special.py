"""The modified digamma function psi~ (Nielsen's beta, up to sign) and the
modified gamma function Gamma~, with all their representations.

psi~(q) = -zeta_E(1, q);  Gamma~ solves  psi~ = (log Gamma~)' with
Gamma~(q) ~ 1/q as q -> 0+, which fixes Gamma~(1) = pi/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _classical
from . import ddreal as dd
from .ddreal import ExtReal
from .errors import DomainError, RegionError
from .result import DEFAULT_TOL, AccelConfig, EvalResult
from .series import alt_series_sum
from .stieltjes import gamma_tilde, mod_euler_constant
from .zeta import eta, zeta_e_boole

PSI_PATHS = ("auto", "neg_gamma0", "half_digamma_diff", "series_th2", "integer_closed")
LGAMMA_PATHS = ("series_lgamma", "product", "power_series")


@dataclass(frozen=True)
class PsiTildeValue:
    value: float
    err_est: float
    path: str


@dataclass(frozen=True)
class GammaModValue:
    log_value: float
    err_est: float

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _check_q(q) -> float:
    q = float(q)
    if not math.isfinite(q) or q <= 0.0:
        raise DomainError(f"argument must be a finite real > 0, got {q}")
    return q


def classical_digamma(q) -> EvalResult:
    """psi(q) for real q > 0, |error| <= 1e-13."""
    q = _check_q(q)
    return EvalResult(_classical.digamma(q), 1e-14 * max(1.0, abs(math.log(q))), "digamma", 1)


def classical_log_gamma(q) -> EvalResult:
    """log Gamma(q) for real q > 0, |error| <= 1e-13."""
    q = _check_q(q)
    return EvalResult(_classical.loggamma(q), 1e-14 * max(1.0, abs(q)), "log_gamma", 1)


def psi_tilde(q, path: str = "auto") -> PsiTildeValue:
    """Modified digamma by the selected representation; the paths agree within
    their combined error estimates and are tested against each other."""
    q = _check_q(q)
    if path not in PSI_PATHS:
        raise DomainError(f"unknown path {path!r}; choose from {PSI_PATHS}")
    if path == "auto":
        path = "half_digamma_diff"
    if path == "neg_gamma0":
        r = gamma_tilde(0, q)
        return PsiTildeValue(-r.value, r.err_est, path)
    if path == "half_digamma_diff":
        v = 0.5 * (_classical.digamma(q / 2.0) - _classical.digamma((q + 1.0) / 2.0))
        return PsiTildeValue(v, 2e-14 * max(1.0, 1.0 / q), path)
    if path == "series_th2":
        g0 = float(mod_euler_constant())
        res = alt_series_sum(
            lambda m: q / ((m + 1.0) * (m + 1.0 + q)), AccelConfig(target_abs_tol=DEFAULT_TOL)
        )
        # sum_{k>=1} (-1)^k (1/k - 1/(k+q)) = -sum_{m>=0} (-1)^m q/((m+1)(m+1+q))
        return PsiTildeValue(-1.0 / q + g0 - res.value, res.err_est + 1e-15, path)
    return _psi_tilde_integer_value(q)


def _psi_tilde_integer_value(q: float) -> PsiTildeValue:
    if abs(q - round(q)) > 1e-12 or round(q) < 1:
        raise DomainError(f"integer_closed path needs q in {{1, 2, ...}}, got {q}")
    n = int(round(q))
    g0 = float(mod_euler_constant())
    if n % 2 == 0:
        tail = sum((-1.0) ** k / k for k in range(1, n + 1))
    else:
        tail = sum((-1.0) ** k / (k + 1.0) for k in range(n)) - 2.0 * math.log(2.0)
    return PsiTildeValue(-1.0 / n + g0 + tail, 5e-16 * n + 1e-15, "integer_closed")


def psi_tilde_integer(q) -> EvalResult:
    """Closed form for positive integer q (parity-split harmonic pieces)."""
    v = _psi_tilde_integer_value(float(q))
    return EvalResult(v.value, v.err_est, v.path, int(round(float(q))))


def psi_tilde_n(n: int, q, method: str = "series", tol: float = DEFAULT_TOL) -> EvalResult:
    """n-th derivative of psi~: (-1)^(n+1) n! zeta_E(n+1, q).

    ``method='quad'`` cross-checks through the Laplace-type integral
    int_0^inf t^n e^(-qt)/(1+e^(-t)) dt = (-1)^(n+1) psi~^(n)(q).
    """
    q = _check_q(q)
    if not isinstance(n, int) or n < 0:
        raise DomainError("derivative order must be a nonnegative integer")
    if method == "series":
        r = zeta_e_boole(float(n + 1), q, tol=tol)
        sign = (-1.0) ** (n + 1)
        return EvalResult(sign * math.factorial(n) * r.value, math.factorial(n) * r.err_est,
                          "psi_n_series", r.terms_used)
    if method == "quad":
        from .quadrature import integrate_adaptive

        f = lambda t: t ** n * math.exp(-q * t) / (1.0 + math.exp(-t))
        r = integrate_adaptive(f, 0.0, math.inf, tol=max(tol, 1e-12))
        return EvalResult((-1.0) ** (n + 1) * r.value, r.err_est, "psi_n_quad", r.terms_used)
    raise DomainError(f"unknown method {method!r}")


def log_gamma_mod(q, path: str = "series_lgamma", tol: float = DEFAULT_TOL) -> GammaModValue:
    """log of the modified gamma function by three routes.

    series_lgamma:  -log q + g0*q + sum_k (-1)^k (q/k - log(1+q/k)), accelerated;
    product:        paired partial products of the infinite-product form
                    (consecutive factors combined, then Richardson in the pair
                    count to clear the 1/M^2.. tail), binary64 output;
    power_series:   -log q + g0*q + sum_{k>=2} (-1)^(k-1) eta(k) q^k / k, |q|<1.
    """
    q = _check_q(q)
    if path not in LGAMMA_PATHS:
        raise DomainError(f"unknown path {path!r}; choose from {LGAMMA_PATHS}")
    g0 = float(mod_euler_constant())
    base = -math.log(q) + g0 * q
    if path == "series_lgamma":
        res = alt_series_sum(
            lambda m: q / (m + 1.0) - math.log1p(q / (m + 1.0)),
            AccelConfig(target_abs_tol=tol),
        )
        # sum_{k>=1} (-1)^k a_k = -sum_{m>=0} (-1)^m a_{m+1}
        return GammaModValue(base - res.value, res.err_est + 2e-15 * (1 + q))
    if path == "power_series":
        if q >= 1.0:
            raise RegionError(f"power series needs |q| < 1, got {q}")
        eta_cache = {}

        def term(m: int) -> float:
            k = m + 2
            if k not in eta_cache:
                eta_cache[k] = eta(float(k), tol=tol / 10).value
            return eta_cache[k] * q ** k / k

        res = alt_series_sum(term, AccelConfig(target_abs_tol=tol))
        return GammaModValue(base - res.value, res.err_est + 2e-15)
    prod, err = gamma_mod_product_dd(q)
    log_value = float(dd.log(prod))
    return GammaModValue(log_value, err + 1e-15)


def gamma_mod_product_dd(q, checkpoints: tuple = (512, 1024, 2048, 4096)) -> tuple[ExtReal, float]:
    """Gamma~(q) from paired partial products in double-double arithmetic.

    Factor pairs (2m-1, 2m) give a monotone product P_M = P_inf(1 + c2/M^2 +
    c3/M^3 + ...); Richardson extrapolation over the checkpoint ladder removes
    the algebraic tail.
    """
    q = _check_q(q)
    qdd = ExtReal.from_float(q)
    caps = sorted(checkpoints)
    values = []
    prod = dd.DD_ONE
    k = 0
    for m in range(1, caps[-1] + 1):
        for _ in range(2):
            k += 1
            kd = ExtReal(float(k))
            factor = dd.mul(dd.exp(dd.div(-qdd, kd)), dd.add(dd.DD_ONE, dd.div(qdd, kd)))
            prod = dd.mul(prod, factor) if k % 2 == 1 else dd.div(prod, factor)
        if m in caps:
            values.append(prod)
    # Richardson: eliminate 1/M^2, 1/M^3, ... along the doubling ladder
    level = 2
    vals = values
    while len(vals) > 1:
        w = 2.0 ** level
        vals = [
            dd.div(dd.add(dd.mul(ExtReal(w), vals[i + 1]), -vals[i]), ExtReal(w - 1.0))
            for i in range(len(vals) - 1)
        ]
        level += 1
    tail = vals[0]
    g0 = mod_euler_constant()
    gamma_mod = dd.mul(dd.div(dd.exp(dd.mul(g0, qdd)), qdd), tail)
    err = (q * q / 16.0) / caps[0] ** 5 * 40.0 + 1e-28 * abs(float(gamma_mod))
    return gamma_mod, err


def psi_reflection_residual(a: float) -> float:
    """|psi~(a) + psi~(1-a) + pi/sin(pi a)| — zero in exact arithmetic."""
    if not 0.0 < a < 1.0:
        raise DomainError("reflection needs 0 < a < 1")
    lhs = psi_tilde(a).value + psi_tilde(1.0 - a).value
    return abs(lhs + math.pi / math.sin(math.pi * a))
