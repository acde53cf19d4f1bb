"""Polynomials in x, truncated power series in z, and number generators.

Both :class:`Poly` and :class:`Series` are generic over the coefficient
field: ``Fraction`` for classical objects, :class:`~qcatalan.scalar.QRat`
for q-analogues.  Mixing ints or Fractions into a QRat computation is fine,
the QRat operators coerce.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .scalar import QRat, as_qrat, q_factorial, q_int

__all__ = [
    "Poly", "d_q", "Series", "ORDINARY", "EXPONENTIAL", "Q_EXPONENTIAL",
    "exp_series", "e_q_series", "tangent_numbers", "genocchi_numbers",
    "genocchi_from_tangent", "q_tangent_numbers", "DEFAULT_ORDER",
]

DEFAULT_ORDER = 16


def _is_zero(c):
    return not c


class Poly:
    """Dense polynomial in x, ascending coefficients, no trailing zeros."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x(cls, one=1):
        return cls([0, one])

    def is_zero(self):
        return not self.coefficients

    @property
    def degree(self):
        if not self.coefficients:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coefficients) - 1

    def coeff(self, k):
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def leading(self):
        if not self.coefficients:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def has_parity(self, p):
        """True when every nonzero coefficient sits at an index = p (mod 2)."""
        return all(_is_zero(c) for i, c in enumerate(self.coefficients)
                   if (i - p) % 2)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coefficients == other.coefficients
        return self == Poly([other])

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        from .render import render_scalar
        terms = [f"({render_scalar(c)})*x^{i}" for i, c in enumerate(self.coefficients)
                 if not _is_zero(c)]
        return "Poly(" + (" + ".join(terms) or "0") + ")"

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coefficients])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                if not _is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return Poly(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e):
        result = Poly([1])
        for _ in range(e):
            result = result * self
        return result

    def scale(self, c):
        if _is_zero(c):
            return Poly()
        return Poly([c * x for x in self.coefficients])

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if not self.coefficients:
            return self
        return Poly([0] * k + list(self.coefficients))

    def compose_scale(self, c):
        """Return f(c x)."""
        out = []
        power = 1
        for x in self.coefficients:
            out.append(x * power)
            power = power * c
        return Poly(out)

    def evaluate(self, x0):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x0 + c
        return acc

    __call__ = evaluate

    def map_coefficients(self, fn):
        return Poly([fn(c) for c in self.coefficients])


def d_q(f):
    """q-derivative (f(x) - f(qx)) / ((1 - q) x), coefficientwise [n] c_n."""
    return Poly([as_qrat(q_int(n)) * c for n, c in enumerate(f.coefficients) if n > 0])


# -- truncated power series ----------------------------------------------------

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"        # coefficients read against z^n / n!
Q_EXPONENTIAL = "q-exponential"    # coefficients read against z^n / [n]!
_TAGS = (ORDINARY, EXPONENTIAL, Q_EXPONENTIAL)


@lru_cache(maxsize=None)
def _qfact_r(n):
    return as_qrat(q_factorial(n))


class Series:
    """Power series in z known through z^order.

    ``coefficients[n]`` is always the plain coefficient of z^n; the tag only
    records how :meth:`normalized` reads it back.
    """

    __slots__ = ("order", "coefficients", "tag")

    def __init__(self, coefficients, order=None, tag=ORDINARY):
        if tag not in _TAGS:
            raise ValueError(f"unknown normalization tag {tag!r}")
        coeffs = list(coefficients)
        if order is None:
            order = len(coeffs) - 1
        if order < -1:
            raise ValueError("series order must be >= -1")
        coeffs = coeffs[:order + 1] + [0] * (order + 1 - len(coeffs))
        self.order = order
        self.coefficients = tuple(coeffs)
        self.tag = tag

    @classmethod
    def from_normalized(cls, values, tag, order=None):
        """Build from c_n with S = sum c_n z^n / n!  (or / [n]!)."""
        vals = list(values)
        if tag == EXPONENTIAL:
            coeffs = [Fraction(1, factorial(n)) * v for n, v in enumerate(vals)]
        elif tag == Q_EXPONENTIAL:
            coeffs = [v / _qfact_r(n) if isinstance(v, QRat) else as_qrat(v) / _qfact_r(n)
                      for n, v in enumerate(vals)]
        else:
            coeffs = vals
        return cls(coeffs, order, tag)

    def normalized(self, n):
        c = self.coefficients[n]
        if self.tag == EXPONENTIAL:
            return c * factorial(n)
        if self.tag == Q_EXPONENTIAL:
            return as_qrat(c) * _qfact_r(n)
        return c

    def coefficient(self, n):
        if n > self.order:
            raise IndexError(f"coefficient z^{n} beyond truncation order {self.order}")
        return self.coefficients[n]

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.tag != self.tag:
            raise ValueError(f"normalization mismatch: {self.tag} vs {other.tag}")
        return min(self.order, other.order)

    def retag(self, tag):
        return Series(self.coefficients, self.order, tag)

    def truncate(self, order):
        return Series(self.coefficients[:order + 1], min(order, self.order), self.tag)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return self.tag == other.tag and all(
            self.coefficients[i] == other.coefficients[i] for i in range(n + 1))

    def __repr__(self):
        return f"Series(order={self.order}, tag={self.tag}, {list(self.coefficients)!r})"

    def __add__(self, other):
        n = self._check(other)
        return Series([self.coefficients[i] + other.coefficients[i] for i in range(n + 1)],
                      n, self.tag)

    def __neg__(self):
        return Series([-c for c in self.coefficients], self.order, self.tag)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Series([c * x for x in self.coefficients], self.order, self.tag)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        n = self._check(other)
        a, b = self.coefficients, other.coefficients
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                x, y = a[i], b[k - i]
                if not _is_zero(x) and not _is_zero(y):
                    acc = acc + x * y
            out.append(acc)
        return Series(out, n, self.tag)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return self.scale(1 / other if not isinstance(other, int) else Fraction(1, other))
        n = self._check(other)
        b = other.coefficients
        if _is_zero(b[0]):
            raise ZeroDivisionError("series division needs an invertible constant term")
        inv0 = 1 / b[0] if not isinstance(b[0], int) else Fraction(1, b[0])
        out = []
        for k in range(n + 1):
            acc = self.coefficients[k]
            for i in range(1, k + 1):
                if not _is_zero(b[i]) and not _is_zero(out[k - i]):
                    acc = acc - b[i] * out[k - i]
            out.append(acc * inv0)
        return Series(out, n, self.tag)

    def __pow__(self, e):
        result = Series([1], self.order, self.tag)
        for _ in range(e):
            result = result * self
        return result

    def negate_argument(self):
        """S(-z)."""
        return Series([c if n % 2 == 0 else -c for n, c in enumerate(self.coefficients)],
                      self.order, self.tag)

    def scale_argument(self, c):
        """S(c z)."""
        out = []
        power = 1
        for x in self.coefficients:
            out.append(x * power)
            power = power * c
        return Series(out, self.order, self.tag)

    def shift(self, k):
        """Multiply by z^k; negative k divides, which needs vanishing low terms."""
        if k >= 0:
            return Series([0] * k + list(self.coefficients), self.order + k, self.tag)
        low = self.coefficients[:-k]
        if any(not _is_zero(c) for c in low):
            raise ArithmeticError("division by z^k with nonzero low coefficients")
        return Series(self.coefficients[-k:], self.order + k, self.tag)


def exp_series(order=DEFAULT_ORDER, c=1, tag=EXPONENTIAL):
    """e^{c z}."""
    return Series([Fraction(c) ** n / factorial(n) for n in range(order + 1)], order, tag)


def e_q_series(order=DEFAULT_ORDER, step=1):
    """q-exponential sum z^n / [n]! in base q**step."""
    return Series([1 / as_qrat(q_factorial(n, step)) for n in range(order + 1)],
                  order, Q_EXPONENTIAL)


def _require_integer(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x


def tangent_numbers(count):
    """T_1, T_3, ..., T_{2 count - 1} from the tanh expansion."""
    if count < 1:
        raise ValueError("count must be >= 1")
    order = 2 * count - 1
    tanh = (exp_series(order) - exp_series(order, -1)) / (exp_series(order) + exp_series(order, -1))
    return [_require_integer((-1) ** n * tanh.normalized(2 * n + 1), f"T_{2 * n + 1}")
            for n in range(count)]


def genocchi_numbers(count):
    """G_0, G_2, ..., G_{2 count - 2} from z tanh z."""
    if count < 1:
        raise ValueError("count must be >= 1")
    order = 2 * count - 2
    tanh = (exp_series(order) - exp_series(order, -1)) / (exp_series(order) + exp_series(order, -1))
    ztanh = tanh.shift(1).truncate(order)
    out = []
    for n in range(count):
        c = ztanh.normalized(2 * n)
        value = 0 if n == 0 else c * (-1) ** (n - 1) / Fraction(2) ** (2 * n - 1)
        out.append(_require_integer(value, f"G_{2 * n}"))
    return out


def genocchi_from_tangent(n, tangents):
    """G_{2n+2} = (n + 1) T_{2n+1} / 2^{2n}."""
    return Fraction(n + 1) * tangents[n] / 4 ** n


def q_tangent_numbers(count):
    """T_1(q), T_3(q), ... as QPoly; raises if a value is not a polynomial."""
    if count < 1:
        raise ValueError("count must be >= 1")
    order = 2 * count - 1
    e = e_q_series(order)
    ratio = (e - e.negate_argument()) / (e + e.negate_argument())
    out = []
    for n in range(count):
        value = ratio.normalized(2 * n + 1) * (-1) ** n
        if not value.is_polynomial():
            raise ArithmeticError(f"T_{2 * n + 1}(q) is not a polynomial: {value!r}")
        out.append(value.as_qpoly())
    return out
