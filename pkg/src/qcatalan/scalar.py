"""Exact scalars: rationals, polynomials in q, and rational functions in q.

``Rational`` is :class:`fractions.Fraction`.  :class:`QPoly` is a dense
polynomial in ``q`` with rational coefficients and :class:`QRat` is an element
of the field Q(q) kept in lowest terms.  Both are immutable.

Internally a ``QPoly`` is an integer coefficient tuple over a positive common
denominator, and a ``QRat`` is ``c * N / D`` with ``N`` and ``D`` primitive
integer polynomials with positive leading coefficients and ``gcd(N, D) = 1``.
That triple is unique, so equality is structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

from . import kernels as K

Rational = Fraction

__all__ = [
    "Rational", "QPoly", "QRat", "SignedQMonomial", "PoleError",
    "q_int", "q_factorial", "q_binomial", "q_pochhammer", "qrat_normalize",
    "eval_at_q", "Q", "qpow", "as_qrat",
]


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""


def _lcm(a, b):
    return a // gcd(a, b) * b


class QPoly:
    """Dense polynomial in q over the rationals, ascending powers."""

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coefficients=()):
        coeffs = [Fraction(c) for c in coefficients]
        den = 1
        for c in coeffs:
            den = _lcm(den, c.denominator)
        ints = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(ints, den)

    def _set(self, ints, den):
        if den < 0:
            ints = [-x for x in ints]
            den = -den
        while ints and not ints[-1]:
            ints.pop()
        if not ints:
            self._c, self._d = (), 1
        else:
            g = gcd(gcd(*ints), den)
            if g != 1:
                ints = [x // g for x in ints]
                den //= g
            self._c, self._d = tuple(ints), den
        self._hash = None

    @classmethod
    def _raw(cls, ints, den=1):
        obj = cls.__new__(cls)
        obj._set(list(ints), den)
        return obj

    @classmethod
    def monomial(cls, exponent, coeff=1):
        if exponent < 0:
            raise ValueError("QPoly exponents must be non-negative")
        c = Fraction(coeff)
        return cls._raw([0] * exponent + [c.numerator], c.denominator)

    @classmethod
    def constant(cls, c):
        return cls.monomial(0, c)

    # -- inspection ---------------------------------------------------------

    @property
    def coefficients(self):
        return tuple(Fraction(c, self._d) for c in self._c)

    def is_zero(self):
        return not self._c

    @property
    def degree(self):
        if not self._c:
            raise ValueError("the zero polynomial has no degree")
        return len(self._c) - 1

    def leading_coefficient(self):
        if not self._c:
            raise ValueError("the zero polynomial has no leading coefficient")
        return Fraction(self._c[-1], self._d)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self == QPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._c, self._d))
        return self._hash

    def __repr__(self):
        return f"QPoly({[str(c) for c in self.coefficients]})"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = _lcm(self._d, o._d)
        a = K.poly_scale(list(self._c), d // self._d)
        b = K.poly_scale(list(o._c), d // o._d)
        return QPoly._raw(K.poly_add(a, b), d)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw([-c for c in self._c], self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly._raw(K.poly_mul(list(self._c), list(o._c)), self._d * o._d)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a QPoly")
        result = QPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other):
        """Quotient ``self / other``; raises ``ArithmeticError`` if not exact."""
        o = self._coerce(other)
        if not o:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._c:
            return self
        e = len(self._c) - len(o._c) + 1
        if e <= 0:
            raise ArithmeticError("polynomial division is not exact")
        # scale so the integer division is exact whenever the rational one is
        scale = o._c[-1] ** e
        quo = K.poly_quo_exact(K.poly_scale(list(self._c), scale), list(o._c))
        if quo is None:
            raise ArithmeticError("polynomial division is not exact")
        return QPoly._raw(K.poly_scale(quo, o._d), self._d * scale)

    def inflate(self, k):
        """Substitute q -> q^k."""
        if k < 1:
            raise ValueError("inflate needs k >= 1")
        if not self._c:
            return self
        ints = [0] * (k * (len(self._c) - 1) + 1)
        for i, c in enumerate(self._c):
            ints[k * i] = c
        return QPoly._raw(ints, self._d)

    def __call__(self, q0):
        """Evaluate exactly at a rational point."""
        x = Fraction(q0)
        if not self._c:
            return Fraction(0)
        deg = len(self._c) - 1
        v = K.poly_eval_homog(list(self._c), x.numerator, x.denominator)
        return Fraction(v, self._d * x.denominator ** deg)


@dataclass(frozen=True)
class SignedQMonomial:
    """The Pochhammer base ``sign * q**exponent``."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")


def _as_ints(p):
    return list(p._c), p._d


def _primitive(ints):
    """Split into (signed content, primitive part with positive lead)."""
    c = gcd(*ints)
    if ints[-1] < 0:
        c = -c
    if c == 1:
        return 1, tuple(ints)
    return c, tuple(x // c for x in ints)


_ONE_T = (1,)


class QRat:
    """Element of Q(q) in lowest terms."""

    __slots__ = ("_k", "_n", "_m", "_hash")

    def __init__(self, num=0, den=1):
        r = qrat_normalize(QPoly._coerce(num) if not isinstance(num, QPoly) else num,
                           QPoly._coerce(den) if not isinstance(den, QPoly) else den)
        self._k, self._n, self._m, self._hash = r._k, r._n, r._m, None

    @classmethod
    def _make(cls, k, n, m):
        obj = cls.__new__(cls)
        obj._k = k
        obj._n = n
        obj._m = m
        obj._hash = None
        return obj

    @classmethod
    def from_scalar(cls, x):
        if isinstance(x, QRat):
            return x
        if isinstance(x, QPoly):
            if not x._c:
                return ZERO
            c, n = _primitive(list(x._c))
            return cls._make(Fraction(c, x._d), n, _ONE_T)
        if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
            x = Fraction(x)
            if not x:
                return ZERO
            return cls._make(x, _ONE_T, _ONE_T)
        raise TypeError(f"cannot convert {type(x).__name__} to QRat")

    # -- canonical parts ----------------------------------------------------

    @property
    def num(self):
        """Numerator in the canonical (monic denominator) form."""
        if not self._n:
            return QPoly()
        lead = self._m[-1]
        return QPoly._raw(list(self._n), 1) * QPoly.constant(self._k / lead)

    @property
    def den(self):
        """Monic denominator."""
        return QPoly._raw(list(self._m), self._m[-1])

    def is_zero(self):
        return not self._n

    def is_polynomial(self):
        return self._m == _ONE_T

    def as_qpoly(self):
        if not self.is_polynomial():
            raise ArithmeticError("not a polynomial in q")
        return self.num

    def is_constant(self):
        return self._m == _ONE_T and len(self._n) <= 1

    def as_rational(self):
        if not self.is_constant():
            raise ArithmeticError("not a constant")
        return self._k if self._n else Fraction(0)

    def __bool__(self):
        return bool(self._n)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            try:
                other = QRat.from_scalar(other)
            except TypeError:
                return NotImplemented
        return self._k == other._k and self._n == other._n and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._k, self._n, self._m))
        return self._hash

    def __repr__(self):
        from .render import render_scalar
        return f"QRat({render_scalar(self)!r})"

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, QRat):
            return other
        try:
            return QRat.from_scalar(other)
        except TypeError:
            return None

    def __neg__(self):
        if not self._n:
            return self
        return QRat._make(-self._k, self._n, self._m)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._n:
            return self
        if not self._n:
            return o
        k1, k2 = self._k, o._k
        p1, r1 = k1.numerator, k1.denominator
        p2, r2 = k2.numerator, k2.denominator
        n1, n2 = list(self._n), list(o._n)
        m1, m2 = self._m, o._m
        if m1 == m2:
            total = K.poly_add(K.poly_scale(n1, p1 * r2), K.poly_scale(n2, p2 * r1))
            if not total:
                return ZERO
            den = list(m1)
            if den != [1]:
                g = K.poly_gcd(total, den)
                if g != [1]:
                    total = K.poly_quo_exact(total, g)
                    den = K.poly_quo_exact(den, g)
        else:
            g = K.poly_gcd(list(m1), list(m2))
            d1 = K.poly_quo_exact(list(m1), g)
            d2 = K.poly_quo_exact(list(m2), g)
            total = K.poly_add(K.poly_mul(K.poly_scale(n1, p1 * r2), d2),
                               K.poly_mul(K.poly_scale(n2, p2 * r1), d1))
            if not total:
                return ZERO
            if g != [1]:
                h = K.poly_gcd(total, g)
                if h != [1]:
                    total = K.poly_quo_exact(total, h)
                    g = K.poly_quo_exact(g, h)
            den = K.poly_mul(K.poly_mul(g, d1), d2)
        c, n = _primitive(total)
        return QRat._make(Fraction(c, r1 * r2), n, tuple(den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._n or not o._n:
            return ZERO
        n1, m1, n2, m2 = self._n, self._m, o._n, o._m
        if m1 == _ONE_T and m2 == _ONE_T:
            return QRat._make(self._k * o._k, tuple(K.poly_mul(list(n1), list(n2))), _ONE_T)
        n1, m2 = _cancel(n1, m2)
        n2, m1 = _cancel(n2, m1)
        n = K.poly_mul(list(n1), list(n2))
        m = K.poly_mul(list(m1), list(m2))
        return QRat._make(self._k * o._k, tuple(n), tuple(m))

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise ZeroDivisionError("QRat division by zero")
        return QRat._make(1 / self._k, self._m, self._n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e == 0:
            return ONE
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        if base._n == _ONE_T or base._m == _ONE_T:
            # powers of primitive polynomials stay primitive and coprime
            n = _tpow(base._n, e) if base._n else base._n
            return QRat._make(base._k ** e, n, _tpow(base._m, e))
        return QRat._make(base._k ** e, _tpow(base._n, e), _tpow(base._m, e))

    def inflate(self, k):
        """Substitute q -> q^k."""
        return QRat._make(self._k, _inflate_t(self._n, k), _inflate_t(self._m, k))

    def __call__(self, q0):
        return eval_at_q(self, q0)


def _tpow(t, e):
    if t == _ONE_T or e == 1:
        return t
    if len(t) > 1 and not any(t[:-1]):
        return tuple([0] * ((len(t) - 1) * e) + [t[-1] ** e])
    result = [1]
    base = list(t)
    while e:
        if e & 1:
            result = K.poly_mul(result, base)
        e >>= 1
        if e:
            base = K.poly_mul(base, base)
    return tuple(result)


def _inflate_t(t, k):
    if not t:
        return t
    out = [0] * (k * (len(t) - 1) + 1)
    for i, c in enumerate(t):
        out[k * i] = c
    return tuple(out)


def _cancel(n, m):
    if m == _ONE_T or len(n) == 1:
        return n, m
    g = K.poly_gcd(list(n), list(m))
    if g == [1]:
        return n, m
    return tuple(K.poly_quo_exact(list(n), g)), tuple(K.poly_quo_exact(list(m), g))


ZERO = QRat._make(Fraction(0), (), _ONE_T)
ONE = QRat._make(Fraction(1), _ONE_T, _ONE_T)
Q = QRat._make(Fraction(1), (0, 1), _ONE_T)


def as_qrat(x):
    return QRat.from_scalar(x)


def qrat_normalize(num, den=None):
    """Reduce ``num / den`` to canonical form (monic denominator)."""
    if den is None:
        den = QPoly.constant(1)
    num = QPoly._coerce(num)
    den = QPoly._coerce(den)
    if num is None or den is None:
        raise TypeError("qrat_normalize expects QPoly or rational inputs")
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO
    n, nd = _as_ints(num)
    m, md = _as_ints(den)
    cn, n = _primitive(n)
    cm, m = _primitive(m)
    n, m = _cancel(n, m)
    return QRat._make(Fraction(md * cn, nd * cm), n, m)


def eval_at_q(f, q0):
    """Evaluate a q-scalar exactly at the rational point ``q0``."""
    x = Fraction(q0)
    if isinstance(f, QPoly):
        return f(x)
    if isinstance(f, (int, Fraction)):
        return Fraction(f)
    if not f._n:
        return Fraction(0)
    p, r = x.numerator, x.denominator
    dm = K.poly_eval_homog(list(f._m), p, r)
    if dm == 0:
        raise PoleError(f"pole of {f!r} at q = {x}")
    dn = K.poly_eval_homog(list(f._n), p, r)
    shift = (len(f._m) - 1) - (len(f._n) - 1)
    return f._k * Fraction(dn, dm) * Fraction(r) ** shift


def qpow(e):
    """``q**e`` as a QRat for any integer ``e``."""
    if e >= 0:
        return QRat._make(Fraction(1), tuple([0] * e + [1]), _ONE_T)
    return QRat._make(Fraction(1), _ONE_T, tuple([0] * (-e) + [1]))


# -- q-combinatorial primitives ----------------------------------------------


@lru_cache(maxsize=None)
def q_int(n, step=1):
    """``[n] = 1 + q + ... + q^(n-1)`` in base ``q**step``."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    ints = [0] * (step * (n - 1) + 1) if n else []
    for i in range(n):
        ints[step * i] = 1
    return QPoly._raw(ints)


@lru_cache(maxsize=None)
def q_factorial(n, step=1):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return QPoly.constant(1)
    return q_factorial(n - 1, step) * q_int(n, step)


@lru_cache(maxsize=None)
def q_binomial(n, k, step=1):
    if k < 0 or k > n:
        raise ValueError(f"q_binomial({n}, {k}) out of range")
    num = q_factorial(n, step)
    return num.exact_div(q_factorial(k, step) * q_factorial(n - k, step))


@lru_cache(maxsize=None)
def q_pochhammer(a, n, step=1):
    """``(a; p)_n`` with ``p = q**step`` and ``a = sign * q**e``."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    result = QPoly.constant(1)
    for j in range(n):
        factor = [0] * (step * j + a.exponent + 1)
        factor[0] += 1
        factor[step * j + a.exponent] -= a.sign
        result = result * QPoly._raw(factor)
    return result
