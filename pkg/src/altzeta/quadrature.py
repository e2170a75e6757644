"""Adaptive quadrature plus the piecewise route for oscillatory tails.

Finite and semi-infinite smooth integrals go to QUADPACK via scipy.  Tails of
the form  integral_a^inf sin(kappa t) g(t) dt  are instead cut at the zeros
of the sine and fed to the alternating-series accelerator, one closed
half-period piece per term.
"""

from __future__ import annotations

import math
import warnings

import numpy as np
from scipy import integrate as _sint

from .errors import InvalidInterval, NonConvergence
from .result import AccelConfig, EvalResult
from .series import alt_series_sum

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(12)


def integrate_adaptive(f, a: float, b: float, tol: float = 1e-10) -> EvalResult:
    """Integrate f over (a, b); b may be math.inf."""
    if not tol > 0:
        raise InvalidInterval("tol must be positive")
    if not a < b:
        raise InvalidInterval(f"need a < b, got [{a}, {b}]")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _sint.IntegrationWarning)
        value, abserr, info, *rest = _sint.quad(
            f, a, b, epsabs=tol / 2, epsrel=1e-12, limit=200, full_output=1
        )
    neval = int(info["neval"])
    result = EvalResult(value, abserr, "quad", neval)
    if rest or abserr > tol:
        raise NonConvergence(f"quadrature error estimate {abserr:g} exceeds {tol:g}", result)
    return result


def _gauss_piece(f, lo: float, hi: float) -> float:
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    return half * float(np.dot(_GL_WEIGHTS, [f(mid + half * x) for x in _GL_NODES]))


def integrate_oscillatory_tail(g, a: float, kappa: float, tol: float = 1e-12) -> EvalResult:
    """integral_a^inf sin(kappa t) g(t) dt for smooth g with decreasing envelope."""
    if kappa <= 0:
        raise InvalidInterval("kappa must be positive")
    half = math.pi / kappa
    # first sine zero at or after a
    t0 = math.ceil(a * kappa / math.pi - 1e-12) * half
    head = 0.0
    head_evals = 0
    if t0 > a + 1e-15:
        head = _gauss_piece(lambda t: math.sin(kappa * t) * g(t), a, t0)
        head_evals = len(_GL_NODES)

    pieces: list[float] = []

    def magnitude(m: int) -> float:
        while len(pieces) <= m:
            j = len(pieces)
            pieces.append(
                _gauss_piece(lambda t: math.sin(kappa * t) * g(t), t0 + j * half, t0 + (j + 1) * half)
            )
        return abs(pieces[m])

    res = alt_series_sum(magnitude, AccelConfig(max_terms=300, target_abs_tol=tol))
    sign0 = 1.0 if math.sin(kappa * (t0 + 0.5 * half)) > 0 else -1.0
    value = head + sign0 * res.value
    return EvalResult(value, res.err_est, "osc_pieces", res.terms_used * len(_GL_NODES) + head_evals)
