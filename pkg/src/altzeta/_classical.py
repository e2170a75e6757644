"""Classical log-gamma and digamma, real and complex, as internal plumbing.

Upward recurrence to Re w >= 12 followed by the Stirling/Bernoulli series;
ten Bernoulli terms leave the series remainder near 1e-22 at the shift
threshold, comfortably below the 1e-13 contract of the public wrappers.
"""

from __future__ import annotations

import cmath
import math

from .combinatorics import bernoulli_even
from .errors import DomainError

_SHIFT = 12.0
_N_BERN = 10
_B2K = [float(bernoulli_even(k)) for k in range(1, _N_BERN + 1)]
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def loggamma(w):
    """log Gamma on Re w > 0 (principal branch); accepts float or complex."""
    is_real = not isinstance(w, complex)
    wc = complex(w)
    if wc.real <= 0.0:
        raise DomainError("loggamma implemented for Re w > 0 only")
    shift = 0.0 + 0.0j
    while wc.real < _SHIFT:
        shift += cmath.log(wc)
        wc += 1.0
    inv2 = 1.0 / (wc * wc)
    frac = 0.0 + 0.0j
    p = 1.0 / wc
    for k, b in enumerate(_B2K, start=1):
        frac += b / (2 * k * (2 * k - 1)) * p
        p *= inv2
    out = (wc - 0.5) * cmath.log(wc) - wc + _HALF_LOG_2PI + frac - shift
    return out.real if is_real else out


def gamma(w):
    """Gamma on Re w > 0 via exp(loggamma)."""
    out = loggamma(w)
    return math.exp(out) if not isinstance(out, complex) else cmath.exp(out)


def digamma(w):
    """psi on Re w > 0; accepts float or complex."""
    is_real = not isinstance(w, complex)
    wc = complex(w)
    if wc.real <= 0.0:
        raise DomainError("digamma implemented for Re w > 0 only")
    acc = 0.0 + 0.0j
    while wc.real < _SHIFT:
        acc -= 1.0 / wc
        wc += 1.0
    inv2 = 1.0 / (wc * wc)
    frac = 0.0 + 0.0j
    p = inv2
    for k, b in enumerate(_B2K, start=1):
        frac += b / (2 * k) * p
        p *= inv2
    out = acc + cmath.log(wc) - 0.5 / wc - frac
    return out.real if is_real else out


EULER_GAMMA = -digamma(1.0)
