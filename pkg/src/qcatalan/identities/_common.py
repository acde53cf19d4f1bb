"""Shared helpers for the identity modules."""
from fractions import Fraction
from functools import lru_cache

from ..algebra import Poly, genocchi_numbers, q_tangent_numbers, tangent_numbers
from ..families import FamilySpec, family_poly, s_samples
from ..scalar import ONE, QRat

X = Poly.x(Fraction(1))
XQ = Poly.x(ONE)
ZERO_Q = QRat()


def iverson(cond, one=Fraction(1)):
    return one if cond else one * 0


def s_points(degree):
    """Enough distinct rational points to pin down a polynomial of this degree in s."""
    return s_samples(degree + 1)


def series_s_points(order):
    """0, 1, -1 first, then more samples until each z^n coefficient (s-degree
    at most n/2) is determined."""
    pts = [Fraction(0), Fraction(1), Fraction(-1)]
    for s in s_samples(order + 4):
        if len(pts) >= max(3, order // 2 + 1):
            break
        if s not in pts:
            pts.append(s)
    return pts


@lru_cache(maxsize=None)
def _tangents(count):
    return tuple(tangent_numbers(count))


def tangent(k):
    """T_{2k+1}."""
    return _tangents(max(16, k + 1))[k]


@lru_cache(maxsize=None)
def _genocchi(count):
    return tuple(genocchi_numbers(count))


def genocchi(n):
    """G_{2n}."""
    return _genocchi(max(16, n + 1))[n]


@lru_cache(maxsize=None)
def _q_tangents(count):
    return tuple(QRat(t) for t in q_tangent_numbers(count))


def q_tangent(k):
    """T_{2k+1}(q) as a QRat."""
    return _q_tangents(max(8, k + 1))[k]


def poly_sum(terms, one=Fraction(1)):
    acc = Poly([])
    for t in terms:
        acc = acc + t
    return acc


def fam(name, n, m=0, s=None):
    return family_poly(FamilySpec(name, m, s), n)


def solve_odd_expansion(name, m, n):
    """a_0..a_n with p_{2n+1} = sum_k a_k x^{2k+1} p_{2n-2k}, solved from the
    s-degree triangle (families are homogeneous: the x^{d-2j} coefficient
    carries s^j)."""
    def c(deg, j):
        return family_poly(FamilySpec(name, m, 1), deg).coefficients[deg - 2 * j]

    a = [None] * (n + 1)
    for j in range(n, -1, -1):
        k_new = n - j
        acc = c(2 * n + 1, j)
        for k in range(k_new):
            acc = acc - a[k] * c(2 * n - 2 * k, j)
        a[k_new] = acc / c(2 * n - 2 * k_new, j)
    return a
