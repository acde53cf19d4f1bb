# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels.

Same contract as ``qcatalan._kernels_py``: ascending lists of Python ints,
no trailing zeros.  Products whose coefficient bound fits in 62 bits are
computed in C integers; everything else falls back to Python ints.
"""
from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free
from math import gcd, isqrt

from ._kernels_py import _kron_mul, KRONECKER_CUTOFF

__all__ = [
    "poly_add", "poly_sub", "poly_scale", "poly_mul", "poly_quo_exact",
    "poly_prem", "poly_content", "poly_gcd", "poly_eval_homog",
]

cdef object _LIMIT = 1 << 62


cdef list _strip(list a):
    while a and not a[len(a) - 1]:
        a.pop()
    return a


def poly_add(list a, list b):
    cdef Py_ssize_t i
    if len(a) < len(b):
        a, b = b, a
    cdef list r = list(a)
    for i in range(len(b)):
        r[i] = r[i] + b[i]
    return _strip(r)


def poly_sub(list a, list b):
    cdef Py_ssize_t i, n = max(len(a), len(b))
    cdef list r = list(a) + [0] * (n - len(a))
    for i in range(len(b)):
        r[i] = r[i] - b[i]
    return _strip(r)


def poly_scale(list a, c):
    if not c:
        return []
    return [c * x for x in a]


cdef list _mul_small(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), n = na + nb - 1, i, j
    cdef int64_t *ca = <int64_t *> malloc(na * sizeof(int64_t))
    cdef int64_t *cb = <int64_t *> malloc(nb * sizeof(int64_t))
    cdef int64_t *cr = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t x
    cdef list out
    try:
        for i in range(na):
            ca[i] = a[i]
        for i in range(nb):
            cb[i] = b[i]
        for i in range(n):
            cr[i] = 0
        for i in range(na):
            x = ca[i]
            if x:
                for j in range(nb):
                    cr[i + j] += x * cb[j]
        out = [cr[i] for i in range(n)]
    finally:
        free(ca)
        free(cb)
        free(cr)
    return _strip(out)


cdef list _mul_obj(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list r = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                r[i + j] = r[i + j] + x * b[j]
    return _strip(r)


def poly_mul(list a, list b):
    if not a or not b:
        return []
    if len(a) == 1:
        return poly_scale(b, a[0])
    if len(b) == 1:
        return poly_scale(a, b[0])
    ma = max([abs(c) for c in a])
    mb = max([abs(c) for c in b])
    if ma * mb * min(len(a), len(b)) < _LIMIT:
        return _mul_small(a, b)
    if min(len(a), len(b)) >= KRONECKER_CUTOFF:
        return _kron_mul(a, b)
    return _mul_obj(a, b)


def poly_quo_exact(list a, list b):
    """Return ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``."""
    cdef Py_ssize_t db, i, j, base
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    if len(a) <= db:
        return None
    lb = b[db]
    cdef list r = list(a)
    cdef list quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            qq, rem = divmod(c, lb)
            if rem:
                return None
            base = i - db
            quo[base] = qq
            for j in range(db):
                r[base + j] = r[base + j] - qq * b[j]
    for i in range(db):
        if r[i]:
            return None
    return quo


def poly_prem(list a, list b):
    """Pseudo-remainder of ``a`` by ``b``."""
    cdef Py_ssize_t db = len(b) - 1, i, j, base
    cdef list r = list(a)
    if len(r) <= db:
        return r
    lb = b[db]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        for j in range(i):
            r[j] = r[j] * lb
        r[i] = 0
        if c:
            base = i - db
            for j in range(db):
                r[base + j] = r[base + j] - c * b[j]
    return _strip(r[:db])


def poly_content(list a):
    return gcd(*a) if a else 0


cdef list _primitive(list a):
    c = gcd(*a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return list(a)
    return [x // c for x in a]


cdef list _prs_gcd(list a, list b):
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = poly_prem(a, b)
        a = b
        b = _primitive(r) if r else r
    return a


cdef object _eval_int(list a, x):
    cdef Py_ssize_t i
    v = 0
    for i in range(len(a) - 1, -1, -1):
        v = v * x + a[i]
    return v


cdef list _interpolate(h, x):
    cdef list out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g = g - x
        out.append(g)
        h = (h - g) // x
    return out


cdef object _heu_gcd(list f, list g):
    fn = max([abs(c) for c in f])
    gn = max([abs(c) for c in g])
    bound = 2 * min(fn, gn) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(fn // abs(f[len(f) - 1]), gn // abs(g[len(g) - 1])) + 2)
    cdef int attempt
    for attempt in range(6):
        ff = _eval_int(f, x)
        gg = _eval_int(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = _interpolate(h, x)
            if cand:
                cand = _primitive(cand)
                if poly_quo_exact(f, cand) is not None and \
                        poly_quo_exact(g, cand) is not None:
                    return cand
            cf = _interpolate(ff // h, x)
            if cf:
                cand = poly_quo_exact(f, _primitive(cf))
                if cand:
                    cand = _primitive(cand)
                    if poly_quo_exact(g, cand) is not None:
                        return cand
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def poly_gcd(list a, list b):
    """Greatest common divisor in Z[q] with positive leading coefficient."""
    if not a:
        return _primitive(b) if b else []
    if not b:
        return _primitive(a)
    c = gcd(gcd(*a), gcd(*b))
    if len(a) == 1 or len(b) == 1:
        return [c]
    f = _primitive(a)
    g = _primitive(b)
    if f == g:
        h = f
    else:
        h = _heu_gcd(f, g)
        if h is None:
            h = _prs_gcd(f, g)
    return h if c == 1 else [c * x for x in h]


def poly_eval_homog(list a, p, r):
    """Return ``sum a_i p^i r^(d-i)`` with ``d = len(a) - 1``."""
    cdef Py_ssize_t i
    v = 0
    rp = 1
    for i in range(len(a) - 1, -1, -1):
        v = v * p + a[i] * rp
        rp = rp * r
    return v
