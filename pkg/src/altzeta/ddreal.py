"""Double-double ("ExtReal") arithmetic: ~31 significant decimal digits.

A value is carried as an unevaluated sum hi + lo of two binary64 numbers with
|lo| <= ulp(hi)/2.  Used as the precision carrier for every oracle path; it is
not interval arithmetic and the error figures quoted below are empirical
worst cases for operands of comparable magnitude, not certificates.

Python 3.10 has no math.fma, so exact products use Dekker splitting.
"""

from __future__ import annotations

import math
from decimal import Decimal, getcontext

from .errors import DomainError

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    err = b - (s - a)
    return s, err


def _two_prod(a: float, b: float):
    p = a * b
    c = _SPLITTER * a
    ahi = c - (c - a)
    alo = a - ahi
    c = _SPLITTER * b
    bhi = c - (c - b)
    blo = b - bhi
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


class ExtReal:
    """Immutable double-double real number."""

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float = 0.0, lo: float = 0.0):
        object.__setattr__(self, "hi", float(hi))
        object.__setattr__(self, "lo", float(lo))

    def __setattr__(self, name, value):
        raise AttributeError("ExtReal is immutable")

    # -- construction -------------------------------------------------
    @staticmethod
    def from_float(x) -> "ExtReal":
        if isinstance(x, ExtReal):
            return x
        return ExtReal(float(x), 0.0)

    @staticmethod
    def from_fraction(num: int, den: int) -> "ExtReal":
        return div(ExtReal(float(num)), ExtReal(float(den))) if den != 1 else ExtReal(float(num))

    @staticmethod
    def from_decimal_str(s: str) -> "ExtReal":
        getcontext().prec = 60
        d = Decimal(s)
        hi = float(d)
        lo = float(d - Decimal(hi))
        return ExtReal(hi, lo)

    # -- conversions ---------------------------------------------------
    def __float__(self) -> float:
        return self.hi + self.lo

    def to_decimal(self, digits: int = 31) -> Decimal:
        from decimal import Context

        exact = Context(prec=digits + 12).add(Decimal(self.hi), Decimal(self.lo))
        return Context(prec=digits).plus(exact)

    def __repr__(self) -> str:
        return f"ExtReal({self.hi!r}, {self.lo!r})"

    def __str__(self) -> str:
        return str(self.to_decimal(31))

    # -- comparisons (total order on the represented value) ------------
    def _cmp(self, other) -> int:
        o = ExtReal.from_float(other)
        if self.hi != o.hi:
            return -1 if self.hi < o.hi else 1
        if self.lo != o.lo:
            return -1 if self.lo < o.lo else 1
        return 0

    def __eq__(self, other):
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.hi, self.lo))

    # -- operators ------------------------------------------------------
    def __neg__(self):
        return ExtReal(-self.hi, -self.lo)

    def __abs__(self):
        return -self if self.hi < 0 or (self.hi == 0 and self.lo < 0) else self

    def __add__(self, other):
        return add(self, ExtReal.from_float(other))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, -ExtReal.from_float(other))

    def __rsub__(self, other):
        return add(ExtReal.from_float(other), -self)

    def __mul__(self, other):
        return mul(self, ExtReal.from_float(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return div(self, ExtReal.from_float(other))

    def __rtruediv__(self, other):
        return div(ExtReal.from_float(other), self)

    def __pow__(self, other):
        if isinstance(other, int):
            return powi(self, other)
        return pow_(self, ExtReal.from_float(other))


DD_ZERO = ExtReal(0.0)
DD_ONE = ExtReal(1.0)


def add(x: ExtReal, y: ExtReal) -> ExtReal:
    s, e = _two_sum(x.hi, y.hi)
    t, f = _two_sum(x.lo, y.lo)
    e += t
    s, e = _quick_two_sum(s, e)
    e += f
    hi, lo = _quick_two_sum(s, e)
    return ExtReal(hi, lo)


def mul(x: ExtReal, y: ExtReal) -> ExtReal:
    p, e = _two_prod(x.hi, y.hi)
    e += x.hi * y.lo + x.lo * y.hi
    hi, lo = _quick_two_sum(p, e)
    return ExtReal(hi, lo)


def div(x: ExtReal, y: ExtReal) -> ExtReal:
    if y.hi == 0.0 and y.lo == 0.0:
        raise DomainError("division by zero")
    q1 = x.hi / y.hi
    r = add(x, -mul(y, ExtReal(q1)))
    q2 = r.hi / y.hi
    r = add(r, -mul(y, ExtReal(q2)))
    q3 = r.hi / y.hi
    hi, lo = _quick_two_sum(q1, q2)
    hi, lo2 = _quick_two_sum(hi, lo + q3)
    return ExtReal(hi, lo2)


def sqrt(x: ExtReal) -> ExtReal:
    if x.hi < 0:
        raise DomainError("sqrt of negative value")
    if x.hi == 0.0:
        return DD_ZERO
    # one Newton step on a double seed doubles the digits
    y = ExtReal(math.sqrt(x.hi))
    y = mul(add(y, div(x, y)), ExtReal(0.5))
    y = mul(add(y, div(x, y)), ExtReal(0.5))
    return y


def powi(x: ExtReal, n: int) -> ExtReal:
    if n == 0:
        return DD_ONE
    if n < 0:
        return div(DD_ONE, powi(x, -n))
    acc = DD_ONE
    base = x
    while n:
        if n & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        n >>= 1
    return acc


def ldexp(x: ExtReal, n: int) -> ExtReal:
    return ExtReal(math.ldexp(x.hi, n), math.ldexp(x.lo, n))


# 40-digit constants, rounded into (hi, lo) pairs at import.
DD_LOG2 = ExtReal.from_decimal_str("0.6931471805599453094172321214581765680755")
DD_PI = ExtReal.from_decimal_str("3.141592653589793238462643383279502884197")
DD_E = ExtReal.from_decimal_str("2.718281828459045235360287471352662497757")

_EXP_MAX_ARG = 709.0


def exp(x: ExtReal) -> ExtReal:
    """exp with |rel err| ~ 1e-31: power-of-two reduction plus Taylor."""
    if x.hi > _EXP_MAX_ARG:
        raise DomainError("exp overflow")
    if x.hi < -_EXP_MAX_ARG:
        return DD_ZERO
    m = round(float(x) / math.log(2.0))
    r = add(x, -mul(DD_LOG2, ExtReal(float(m))))
    # |r| <= log(2)/2; sum r^k/k! until the term underflows the target
    term = DD_ONE
    acc = DD_ONE
    for k in range(1, 40):
        term = div(mul(term, r), ExtReal(float(k)))
        acc = add(acc, term)
        if abs(term.hi) < 1e-35 * abs(acc.hi):
            break
    return ldexp(acc, m)


def log(x: ExtReal) -> ExtReal:
    """log via a double seed plus two Newton corrections."""
    if x.hi <= 0.0:
        raise DomainError("log of nonpositive value")
    y = ExtReal(math.log(x.hi))
    for _ in range(2):
        # y <- y + x*exp(-y) - 1
        y = add(y, add(mul(x, exp(-y)), ExtReal(-1.0)))
    return y


def log1p(x: ExtReal) -> ExtReal:
    """log(1+x); Taylor for small |x| avoids the exp-based Newton loop."""
    ax = abs(x.hi)
    if ax >= 0.25:
        return log(add(DD_ONE, x))
    if ax == 0.0 and x.lo == 0.0:
        return DD_ZERO
    # sum (-1)^(k-1) x^k / k; ~60 digits per 40 terms at |x|<0.25
    term = x
    acc = x
    k = 2
    while True:
        term = mul(term, -x)
        inc = div(term, ExtReal(float(k)))
        acc = add(acc, inc)
        if abs(inc.hi) < 1e-35 * abs(acc.hi) or k > 130:
            return acc
        k += 1


def pow_(x: ExtReal, y: ExtReal) -> ExtReal:
    if x.hi <= 0.0:
        raise DomainError("pow requires positive base")
    return exp(mul(y, log(x)))


_EXT_OPS = {
    "add": add,
    "mul": mul,
    "div": div,
    "log": lambda x, y=None: log(x),
    "exp": lambda x, y=None: exp(x),
    "pow": pow_,
}


def ext_arith(op: str, x, y=None) -> ExtReal:
    """Dispatch table over the supported extended-precision operations."""
    if op not in _EXT_OPS:
        raise DomainError(f"unknown ExtReal op {op!r}")
    x = ExtReal.from_float(x)
    if op in ("log", "exp"):
        return _EXT_OPS[op](x)
    if y is None:
        raise DomainError(f"op {op!r} needs two operands")
    return _EXT_OPS[op](x, ExtReal.from_float(y))
