# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled summation kernels: the hot twins of ``altzeta._kernels_py``.

Same surface, same algorithms: Chebyshev-polynomial acceleration of
alternating series (float64 / complex128 / double-double) and the
double-double alternating power-log series behind the ExtReal oracles.
"""

from libc.math cimport log as c_log, exp as c_exp, sqrt as c_sqrt, ldexp as c_ldexp, round as c_round

from .ddreal import ExtReal

BACKEND = "compiled"
CVZ_MAX_TERMS = 360

cdef double _SPLIT = 134217729.0  # 2**27 + 1
cdef double _LN2_HI = 0.6931471805599453
cdef double _LN2_LO = 2.3190468138462996e-17


cdef struct dd2:
    double hi
    double lo


cdef inline dd2 dd_make(double hi, double lo) noexcept nogil:
    cdef dd2 r
    r.hi = hi
    r.lo = lo
    return r


cdef inline dd2 dd_two_sum(double a, double b) noexcept nogil:
    cdef double s = a + b
    cdef double bb = s - a
    return dd_make(s, (a - (s - bb)) + (b - bb))


cdef inline dd2 dd_quick_sum(double a, double b) noexcept nogil:
    cdef double s = a + b
    return dd_make(s, b - (s - a))


cdef inline dd2 dd_two_prod(double a, double b) noexcept nogil:
    cdef double p = a * b
    cdef double ca = _SPLIT * a
    cdef double ahi = ca - (ca - a)
    cdef double alo = a - ahi
    cdef double cb = _SPLIT * b
    cdef double bhi = cb - (cb - b)
    cdef double blo = b - bhi
    return dd_make(p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo)


cdef inline dd2 dd_add(dd2 x, dd2 y) noexcept nogil:
    cdef dd2 s = dd_two_sum(x.hi, y.hi)
    cdef dd2 t = dd_two_sum(x.lo, y.lo)
    cdef double e = s.lo + t.hi
    cdef dd2 r = dd_quick_sum(s.hi, e)
    e = r.lo + t.lo
    return dd_quick_sum(r.hi, e)


cdef inline dd2 dd_neg(dd2 x) noexcept nogil:
    return dd_make(-x.hi, -x.lo)


cdef inline dd2 dd_mul(dd2 x, dd2 y) noexcept nogil:
    cdef dd2 p = dd_two_prod(x.hi, y.hi)
    cdef double e = p.lo + (x.hi * y.lo + x.lo * y.hi)
    return dd_quick_sum(p.hi, e)


cdef inline dd2 dd_div(dd2 x, dd2 y) noexcept nogil:
    cdef double q1 = x.hi / y.hi
    cdef dd2 r = dd_add(x, dd_neg(dd_mul(y, dd_make(q1, 0.0))))
    cdef double q2 = r.hi / y.hi
    r = dd_add(r, dd_neg(dd_mul(y, dd_make(q2, 0.0))))
    cdef double q3 = r.hi / y.hi
    cdef dd2 s = dd_quick_sum(q1, q2)
    return dd_quick_sum(s.hi, s.lo + q3)


cdef inline dd2 dd_sqrt(dd2 x) noexcept nogil:
    cdef dd2 y = dd_make(c_sqrt(x.hi), 0.0)
    y = dd_mul(dd_add(y, dd_div(x, y)), dd_make(0.5, 0.0))
    y = dd_mul(dd_add(y, dd_div(x, y)), dd_make(0.5, 0.0))
    return y


cdef dd2 dd_powi(dd2 x, long n) noexcept nogil:
    cdef dd2 acc = dd_make(1.0, 0.0)
    cdef dd2 base = x
    cdef long m = n
    if m < 0:
        base = dd_div(dd_make(1.0, 0.0), x)
        m = -m
    while m:
        if m & 1:
            acc = dd_mul(acc, base)
        base = dd_mul(base, base)
        m >>= 1
    return acc


cdef dd2 dd_exp(dd2 x) noexcept nogil:
    cdef long m = <long> c_round((x.hi + x.lo) / _LN2_HI)
    cdef dd2 r = dd_add(x, dd_neg(dd_mul(dd_make(_LN2_HI, _LN2_LO), dd_make(<double> m, 0.0))))
    cdef dd2 term = dd_make(1.0, 0.0)
    cdef dd2 acc = dd_make(1.0, 0.0)
    cdef int k
    for k in range(1, 40):
        term = dd_div(dd_mul(term, r), dd_make(<double> k, 0.0))
        acc = dd_add(acc, term)
        if term.hi < 1e-35 * acc.hi and term.hi > -1e-35 * acc.hi:
            break
    return dd_make(c_ldexp(acc.hi, m), c_ldexp(acc.lo, m))


cdef dd2 dd_log(dd2 x) noexcept nogil:
    cdef dd2 y = dd_make(c_log(x.hi), 0.0)
    cdef int i
    for i in range(2):
        y = dd_add(y, dd_add(dd_mul(x, dd_exp(dd_neg(y))), dd_make(-1.0, 0.0)))
    return y


def cvz_sum_f64(a, int n):
    """Accelerated value of sum_k (-1)^k a_k from the first n terms (a_k real)."""
    cdef double[::1] buf
    import numpy as np
    buf = np.ascontiguousarray(a[:n], dtype=np.float64)
    cdef double d = (3.0 + c_sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    cdef double b = -1.0
    cdef double c = -d
    cdef double s = 0.0
    cdef int k
    with nogil:
        for k in range(n):
            c = b - c
            s += c * buf[k]
            b = (k + n) * <double> (k - n) * b / ((k + 0.5) * (k + 1.0))
    return s / d


def cvz_sum_c128(a, int n):
    cdef double complex[::1] buf
    import numpy as np
    buf = np.ascontiguousarray(a[:n], dtype=np.complex128)
    cdef double d = (3.0 + c_sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    cdef double b = -1.0
    cdef double c = -d
    cdef double complex s = 0
    cdef int k
    with nogil:
        for k in range(n):
            c = b - c
            s = s + c * buf[k]
            b = (k + n) * <double> (k - n) * b / ((k + 0.5) * (k + 1.0))
    return complex(s / d)


cdef void _cvz_weights_dd(int n, dd2 *w) noexcept nogil:
    cdef dd2 d = dd_powi(dd_add(dd_make(3.0, 0.0), dd_sqrt(dd_make(8.0, 0.0))), n)
    d = dd_mul(dd_add(d, dd_div(dd_make(1.0, 0.0), d)), dd_make(0.5, 0.0))
    cdef dd2 b = dd_make(-1.0, 0.0)
    cdef dd2 c = dd_neg(d)
    cdef int k
    for k in range(n):
        c = dd_add(b, dd_neg(c))
        w[k] = dd_div(c, d)
        b = dd_div(dd_mul(dd_make(<double> ((k + n) * (k - n)), 0.0), b),
                   dd_make((k + 0.5) * (k + 1.0), 0.0))


def dd_powlog_sum(int ell, q, s, int start, int n):
    """Accelerated sum_{m>=0} (-1)^m log^ell(m+start+q)/(m+start+q)^s in dd."""
    cdef dd2 qd = dd_make(q.hi, q.lo)
    cdef dd2 sd
    cdef long s_int = 0
    cdef bint int_s = isinstance(s, int)
    if int_s:
        s_int = <long> s
    else:
        sd = dd_make(s.hi, s.lo)
    cdef dd2 *w = <dd2 *> _alloc(n)
    cdef dd2 acc = dd_make(0.0, 0.0)
    cdef dd2 y, u, num, denom, t
    cdef int m
    try:
        with nogil:
            _cvz_weights_dd(n, w)
            for m in range(n):
                y = dd_add(dd_make(<double> (m + start), 0.0), qd)
                if ell > 0 or not int_s:
                    u = dd_log(y)
                if int_s:
                    denom = dd_powi(y, s_int)
                else:
                    denom = dd_exp(dd_mul(sd, u))
                if ell > 0:
                    num = dd_powi(u, ell)
                else:
                    num = dd_make(1.0, 0.0)
                t = dd_div(num, denom)
                acc = dd_add(acc, dd_mul(w[m], t))
    finally:
        _free(w)
    return ExtReal(acc.hi, acc.lo)


def dd_powlog_table(int L, q, int start, int n):
    """Accelerated sums for ell = 0..L at s = 1, sharing one pass of logs."""
    cdef dd2 qd = dd_make(q.hi, q.lo)
    cdef dd2 *w = <dd2 *> _alloc(n)
    cdef dd2 *acc = <dd2 *> _alloc(L + 1)
    cdef dd2 y, inv, u, t
    cdef int m, ell
    try:
        with nogil:
            _cvz_weights_dd(n, w)
            for ell in range(L + 1):
                acc[ell] = dd_make(0.0, 0.0)
            for m in range(n):
                y = dd_add(dd_make(<double> (m + start), 0.0), qd)
                inv = dd_div(dd_make(1.0, 0.0), y)
                if L > 0:
                    u = dd_log(y)
                t = inv
                acc[0] = dd_add(acc[0], dd_mul(w[m], t))
                for ell in range(1, L + 1):
                    t = dd_mul(t, u)
                    acc[ell] = dd_add(acc[ell], dd_mul(w[m], t))
        return [ExtReal(acc[i].hi, acc[i].lo) for i in range(L + 1)]
    finally:
        _free(w)
        _free(acc)


from libc.stdlib cimport malloc, free


cdef void *_alloc(int count) except NULL:
    cdef void *p = malloc(count * sizeof(dd2))
    if p == NULL:
        raise MemoryError()
    return p


cdef void _free(void *p) noexcept:
    free(p)
