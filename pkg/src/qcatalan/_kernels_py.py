"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints in ascending degree with no trailing
zeros; ``[]`` is the zero polynomial.  The compiled module ``_kernels``
exposes exactly the same functions.
"""
from math import gcd, isqrt

__all__ = [
    "poly_add", "poly_sub", "poly_scale", "poly_mul", "poly_quo_exact",
    "poly_prem", "poly_content", "poly_gcd", "poly_eval_homog",
]

KRONECKER_CUTOFF = 24


def _strip(a):
    while a and not a[-1]:
        a.pop()
    return a


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return _strip(r)


def poly_sub(a, b):
    n = max(len(a), len(b))
    r = list(a) + [0] * (n - len(a))
    for i, c in enumerate(b):
        r[i] -= c
    return _strip(r)


def poly_scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def _kron_mul(a, b):
    """Multiply by packing both operands into single big integers."""
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    bound = ma * mb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * nbytes
    half = 1 << (bits - 1)

    def pack(p):
        raw = b"".join((c + half).to_bytes(nbytes, "little") for c in p)
        offset = half * (((1 << (bits * len(p))) - 1) // ((1 << bits) - 1))
        return int.from_bytes(raw, "little") - offset

    n = len(a) + len(b) - 1
    v = pack(a) * pack(b)
    v += half * (((1 << (bits * n)) - 1) // ((1 << bits) - 1))
    raw = v.to_bytes(n * nbytes, "little")
    out = [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half
           for i in range(n)]
    return _strip(out)


def poly_mul(a, b):
    if not a or not b:
        return []
    if len(a) == 1:
        return poly_scale(b, a[0])
    if len(b) == 1:
        return poly_scale(a, b[0])
    if min(len(a), len(b)) >= KRONECKER_CUTOFF:
        return _kron_mul(a, b)
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _strip(r)


def poly_quo_exact(a, b):
    """Return ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return []
    db = len(b) - 1
    if len(a) <= db:
        return None
    lb = b[-1]
    r = list(a)
    quo = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            qq, rem = divmod(c, lb)
            if rem:
                return None
            quo[i - db] = qq
            base = i - db
            for j in range(db):
                r[base + j] -= qq * b[j]
    for i in range(db):
        if r[i]:
            return None
    return quo


def poly_prem(a, b):
    """Pseudo-remainder of ``a`` by ``b``."""
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return r
    lb = b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        for j in range(i):
            r[j] *= lb
        r[i] = 0
        if c:
            base = i - db
            for j in range(db):
                r[base + j] -= c * b[j]
    return _strip(r[:db])


def poly_content(a):
    return gcd(*a) if a else 0


def _primitive(a):
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    return [x // c for x in a] if c != 1 else list(a)


def _prs_gcd(a, b):
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = poly_prem(a, b)
        a = b
        b = _primitive(r) if r else r
    return a


def _eval_int(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def _interpolate(h, x):
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return out


def _heu_gcd(f, g):
    """Heuristic gcd of primitive polynomials, or ``None`` if it gives up."""
    fn = max(abs(c) for c in f)
    gn = max(abs(c) for c in g)
    bound = 2 * min(fn, gn) + 29
    x = max(min(bound, 99 * isqrt(bound)),
            2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
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


def poly_gcd(a, b):
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


def poly_eval_homog(a, p, r):
    """Return ``sum a_i p^i r^(d-i)`` with ``d = len(a) - 1``."""
    v = 0
    rp = 1
    for c in reversed(a):
        v = v * p + c * rp
        rp *= r
    return v
