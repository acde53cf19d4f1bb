"""Polynomial families, their coefficients, and their moment functionals.

Every family is built two ways: from its explicit coefficient formula
(:func:`family_poly`) and from a recurrence or inverse expansion
(:func:`family_poly_by_recurrence`).  Agreement of the two is the main
self-check of this module.

Families in x (``m`` a non-negative integer, ``s`` a scalar):

=============  ===========================================================
``lucas``      Lucas variant l_n(x), with l_0 = 1
``fibonacci``  Fibonacci variant f_n(x)
``cheb_t``     monic Chebyshev polynomials of the first kind
``cheb_u``     monic Chebyshev polynomials of the second kind
``l_classical``  l_n(x, m, s), moments (-s)^n sigma(m, n)
``v_classical``  v_n(x, m, s) = l_n(x, m, -s/4)
``l_q``        l_n(x, m, s, q)
``h_q``        q-Hermite variant h_n(x, s, q)
``v_q``        q-Chebyshev-like v_n(x, m, s, q)
``H_q``        discrete q-Hermite variant H_n(x, s, q)
``R_q``        R(n, m, q), moments [m]!/[m+n]!
``r_q``        r_n(x, q), all moments 1
=============  ===========================================================
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import Poly, Series, d_q
from .scalar import (
    ONE, QRat, SignedQMonomial, as_qrat, q_binomial, q_factorial, q_int,
    q_pochhammer, qpow,
)

FAMILIES = ("lucas", "fibonacci", "cheb_t", "cheb_u", "l_classical", "v_classical",
            "l_q", "h_q", "v_q", "H_q", "R_q", "r_q")
Q_FAMILIES = frozenset({"l_q", "h_q", "v_q", "H_q", "R_q", "r_q"})
_USES_M = frozenset({"l_classical", "v_classical", "l_q", "v_q", "R_q"})
_USES_S = frozenset({"l_classical", "v_classical", "l_q", "h_q", "v_q", "H_q"})

FUNCTIONALS = {
    "lambda": "lucas",
    "lambda_star": "fibonacci",
    "cheb_t": "cheb_t",
    "cheb_u": "cheb_u",
    "lambda_m": "l_classical",
    "v_m": "v_classical",
    "lambda_q": "l_q",
    "phi_q": "v_q",
    "hermite_h": "h_q",
    "hermite_H": "H_q",
    "R_q": "R_q",
    "r_q": "r_q",
}


# -- small exact helpers -------------------------------------------------------

@lru_cache(maxsize=None)
def qi(n, step=1):
    """[n] as a QRat."""
    return as_qrat(q_int(n, step))


@lru_cache(maxsize=None)
def qf(n, step=1):
    """[n]! as a QRat."""
    return as_qrat(q_factorial(n, step))


@lru_cache(maxsize=None)
def qb(n, k, step=1):
    """q-binomial as a QRat; zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return QRat()
    return as_qrat(q_binomial(n, k, step))


@lru_cache(maxsize=None)
def poch(sign, e, n, step=1):
    """(sign * q^e; q^step)_n as a QRat."""
    return as_qrat(q_pochhammer(SignedQMonomial(sign, e), n, step))


def binom(n, k):
    return comb(n, k) if 0 <= k <= n else 0


def s_samples(count):
    """Deterministic distinct rational sample points 1, -1, 2, -2, 3, ..."""
    out = []
    i = 1
    while len(out) < count:
        out.append(Fraction(i))
        if len(out) < count:
            out.append(Fraction(-i))
        i += 1
    return out


# -- normalized super Catalan numbers and recurrence coefficients --------------

def sigma(m, n):
    """(2n)! m! / (n! (n+m)!)."""
    return Fraction(factorial(2 * n) * factorial(m), factorial(n) * factorial(n + m))


@lru_cache(maxsize=None)
def sigma_q(m, n):
    return qf(2 * n) * qf(m) / (qf(n) * qf(m + n))


def lambda_coeff(n, m):
    if n == 0:
        return Fraction(2, m + 1)
    return Fraction((n + 1) * (n + 2 * m), (n + m) * (n + m + 1))


@lru_cache(maxsize=None)
def lambda_coeff_q(n, m):
    if n == 0:
        # (1 + q^m)/[m+1]; equals the generic formula for m >= 1 and gives 2 at m = 0
        return (ONE + qpow(m)) / qi(m + 1)
    return qi(n + 1) * qi(n + 2 * m) / (qi(n + m) * qi(n + m + 1))


@lru_cache(maxsize=None)
def mu_coeff_q(j, m):
    return lambda_coeff_q(j, m) * qpow(j + 1) / ((ONE + qpow(j + m)) * (ONE + qpow(j + m + 1)))


def _falling(m, n, k):
    """prod_{j=1}^k (m + n - j)."""
    out = 1
    for j in range(1, k + 1):
        out *= m + n - j
    return out


def _q_falling(m, n, k):
    """prod_{j=1}^k [m + n - j]."""
    out = ONE
    for j in range(1, k + 1):
        out = out * qi(m + n - j)
    return out


# -- family specification ------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    name: str
    m: int = 0
    s: object = None

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {FAMILIES}")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        if self.name in _USES_S:
            if self.s is None:
                raise ValueError(f"family {self.name!r} needs a value for s")
            s = as_qrat(self.s) if self.name in Q_FAMILIES else Fraction(self.s)
            object.__setattr__(self, "s", s)
        else:
            object.__setattr__(self, "s", None)
        if self.name not in _USES_M:
            object.__setattr__(self, "m", 0)

    @property
    def q_mode(self):
        return "q-exact" if self.name in Q_FAMILIES else "classical"

    @property
    def one(self):
        return ONE if self.name in Q_FAMILIES else Fraction(1)


# -- explicit coefficient formulas -----------------------------------------------

def _from_terms(n, terms, one):
    coeffs = [0] * (n + 1)
    for k, c in terms:
        coeffs[n - 2 * k] = c
    coeffs[n] = one
    return Poly(coeffs)


def _closed_terms(spec, n):
    name, m, s = spec.name, spec.m, spec.s
    ks = range(n // 2 + 1)
    if name == "lucas":
        if n == 0:
            return [(0, Fraction(1))]
        return [(k, Fraction(comb(n - k, k) * n, n - k) * (-1) ** k) for k in ks]
    if name == "cheb_t":
        if n == 0:
            return [(0, Fraction(1))]
        return [(k, Fraction(comb(n - k, k) * n, n - k) * Fraction(-1, 4) ** k) for k in ks]
    if name == "fibonacci":
        return [(k, Fraction(comb(n - k, k) * (-1) ** k)) for k in ks]
    if name == "cheb_u":
        return [(k, comb(n - k, k) * Fraction(-1, 4) ** k) for k in ks]
    if name == "l_classical":
        return [(k, Fraction(factorial(n), factorial(k) * factorial(n - 2 * k) * _falling(m, n, k))
                 * s ** k) for k in ks]
    if name == "v_classical":
        return [(k, Fraction((-1) ** k * factorial(n),
                             factorial(k) * factorial(n - 2 * k) * _falling(m, n, k) * 4 ** k)
                 * s ** k) for k in ks]
    if name == "l_q":
        return [(k, s ** k * qpow(comb(k, 2)) * qf(n) / (qf(k) * qf(n - 2 * k) * _q_falling(m, n, k)))
                for k in ks]
    if name == "h_q":
        return [(k, s ** k * qpow(comb(k, 2)) * qf(n) / (qf(k) * qf(n - 2 * k))) for k in ks]
    if name == "v_q":
        return [(k, (-s) ** k * qpow(k * k) * qf(n)
                 / (qf(k) * qf(n - 2 * k) * _q_falling(m, n, k)
                    * poch(-1, 1, k) * poch(-1, n + m - k, k))) for k in ks]
    if name == "H_q":
        return [(k, (-s) ** k * qpow(k * k) * qf(n) / (qf(k) * qf(n - 2 * k) * poch(-1, 1, k)))
                for k in ks]
    if name == "R_q":
        return [(k, (-1) ** k * qpow(comb(k, 2)) * qb(n // 2, k) / _q_falling(m, n, k)) for k in ks]
    if name == "r_q":
        return [(k, (-1) ** k * qpow(comb(k, 2)) * qb(n // 2, k)) for k in ks]
    raise ValueError(name)


@lru_cache(maxsize=None)
def family_poly(spec, n):
    """Family member of index n from its explicit coefficient formula."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _from_terms(n, _closed_terms(spec, n), spec.one)


def v_q_alternate(m, s, n):
    """v_n(x, m, s, q) from the q-binomial form of its coefficients."""
    s = as_qrat(s)
    terms = [(k, (-1) ** k * qpow(k * k) * qb(n - k, k) * qf(n) * s ** k
              / (qf(n - k) * _q_falling(m, n, k) * poch(-1, 1, k) * poch(-1, n + m - k, k)))
             for k in range(n // 2 + 1)]
    return _from_terms(n, terms, ONE)


# -- recurrence constructions --------------------------------------------------

def _three_term_coeff(spec, j):
    """c_j with p_n = x p_{n-1} + c_{n-2} p_{n-2}."""
    name, m, s = spec.name, spec.m, spec.s
    if name == "lucas":
        return Fraction(-2 if j == 0 else -1)
    if name == "fibonacci":
        return Fraction(-1)
    if name == "cheb_t":
        return Fraction(-1, 2) if j == 0 else Fraction(-1, 4)
    if name == "cheb_u":
        return Fraction(-1, 4)
    if name == "l_classical":
        return s * lambda_coeff(j, m)
    if name == "v_classical":
        return -s / 4 * lambda_coeff(j, m)
    if name == "v_q":
        return -s * mu_coeff_q(j, m)
    if name == "H_q":
        return -s * qpow(j + 1) * qi(j + 1)
    raise ValueError(f"{name} has no three-term recurrence")


def recurrence_coefficient(spec, j):
    """Public access to the three-term coefficient (orthogonal families only)."""
    return _three_term_coeff(spec, j)


@lru_cache(maxsize=None)
def family_poly_by_recurrence(spec, n):
    """Family member of index n built without the explicit coefficients."""
    if n < 0:
        raise ValueError("n must be non-negative")
    one = spec.one
    x = Poly.x(one)
    if n == 0:
        return Poly([one])
    if spec.name in ("R_q", "r_q"):
        # peel x^n with the inverse expansion
        acc = Poly.monomial(n, one)
        for k, c in expansion_coefficients(spec, n).items():
            if k:
                acc = acc - family_poly_by_recurrence(spec, n - 2 * k).scale(c)
        return acc
    if n == 1:
        return x
    prev = family_poly_by_recurrence(spec, n - 1)
    prev2 = family_poly_by_recurrence(spec, n - 2)
    name, m, s = spec.name, spec.m, spec.s
    if name == "l_q":
        sqm = s * qpow(-m)
        return (x * prev - d_q(prev).scale((ONE - qpow(1)) * sqm)
                + prev2.scale(sqm * lambda_coeff_q(n - 2, m)))
    if name == "h_q":
        out = x * prev + prev2.scale(qpow(n - 2) * (ONE + qpow(1)) * qi(n - 1) * s)
        if n >= 4:
            out = out + family_poly_by_recurrence(spec, n - 4).scale(
                (ONE - qpow(1)) * qpow(n - 3) * s * s * qi(n - 1) * qi(n - 2) * qi(n - 3))
        return out
    return x * prev + prev2.scale(_three_term_coeff(spec, n - 2))


# -- expansion of x^n in the family basis --------------------------------------

def a_coeff(n, k, m):
    """n! (n+m-2k)! / (k! (n-2k)! (n+m-k)!); zero outside 0 <= 2k <= n."""
    if k < 0 or 2 * k > n:
        return Fraction(0)
    return Fraction(factorial(n) * factorial(n + m - 2 * k),
                    factorial(k) * factorial(n - 2 * k) * factorial(n + m - k))


def a_coeff_binomial_form(n, k, m):
    """Same value written as C(n,k) (n-k)! (n+m-2k)! / ((n-2k)! (n+m-k)!)."""
    if k < 0 or 2 * k > n:
        return Fraction(0)
    return Fraction(comb(n, k) * factorial(n - k) * factorial(n + m - 2 * k),
                    factorial(n - 2 * k) * factorial(n + m - k))


@lru_cache(maxsize=None)
def a_coeff_q(n, k, m):
    """[n]! [n+m-2k]! / ([k]! [n-2k]! [n+m-k]!)."""
    if k < 0 or 2 * k > n:
        return QRat()
    return qf(n) * qf(n + m - 2 * k) / (qf(k) * qf(n - 2 * k) * qf(n + m - k))


_CLASSICAL_AS_L = {
    "lucas": (0, Fraction(-1)),
    "fibonacci": (1, Fraction(-1)),
    "cheb_t": (0, Fraction(-1, 4)),
    "cheb_u": (1, Fraction(-1, 4)),
}


def expansion_coefficients(spec, n):
    """{k: e_k} with x^n = sum_k e_k p_{n-2k}, from the known inverse formulas."""
    name, m, s = spec.name, spec.m, spec.s
    ks = range(n // 2 + 1)
    if name in _CLASSICAL_AS_L:
        m0, s0 = _CLASSICAL_AS_L[name]
        return {k: a_coeff(n, k, m0) * (-s0) ** k for k in ks}
    if name == "l_classical":
        return {k: a_coeff(n, k, m) * (-s) ** k for k in ks}
    if name == "v_classical":
        return {k: a_coeff(n, k, m) * (s / 4) ** k for k in ks}
    if name == "l_q":
        return {k: (-s) ** k * a_coeff_q(n, k, m) for k in ks}
    if name == "h_q":
        return {k: (-s) ** k * qf(n) / (qf(k) * qf(n - 2 * k)) for k in ks}
    if name == "v_q":
        return {k: a_coeff_q(n, k, m) * qpow(k) * s ** k
                / (poch(-1, 1, k) * poch(-1, n + m + 1 - 2 * k, k)) for k in ks}
    if name == "H_q":
        return {k: qf(n) / (qf(k) * qf(n - 2 * k)) * qpow(k) * s ** k / poch(-1, 1, k)
                for k in ks}
    if name == "R_q":
        out = {}
        for k in ks:
            den = ONE
            for j in range(k):
                den = den * qi(m + n - k - j)
            out[k] = qb(n // 2, k) / den
        return out
    if name == "r_q":
        return {k: qb(n // 2, k) for k in ks}
    raise ValueError(name)


def expand_in_basis(spec, poly):
    """Coefficients {j: c_j} of ``poly`` in the basis p_0, p_1, ... by peeling."""
    out = {}
    rest = poly
    while not rest.is_zero():
        d = rest.degree
        c = rest.leading()
        out[d] = c
        rest = rest - family_poly(spec, d).scale(c)
    return out


def monomial_expansion(n, m, s):
    """[(index, coefficient)] with x^n = sum coefficient * l_index(x, m, s)."""
    s = Fraction(s)
    return [(n - 2 * k, a_coeff(n, k, m) * (-s) ** k) for k in range(n // 2 + 1)]


# -- moment functionals --------------------------------------------------------

@dataclass(frozen=True)
class MomentFunctional:
    """Linear functional F with F(p_n) = [n = 0] for the named family."""

    name: str
    m: int = 0
    s: object = None

    def __post_init__(self):
        if self.name not in FUNCTIONALS:
            raise ValueError(f"unknown functional {self.name!r}; expected one of "
                             f"{sorted(FUNCTIONALS)}")

    @property
    def family(self):
        return FamilySpec(FUNCTIONALS[self.name], self.m, self.s)


def _as_spec(functional):
    return functional.family if isinstance(functional, MomentFunctional) else functional


@lru_cache(maxsize=None)
def _moment_spec(spec, n):
    name, m, s = spec.name, spec.m, spec.s
    if name == "lucas":
        return Fraction(comb(2 * n, n))
    if name == "fibonacci":
        return Fraction(comb(2 * n, n), n + 1)
    if name == "cheb_t":
        return Fraction(comb(2 * n, n), 4 ** n)
    if name == "cheb_u":
        return Fraction(comb(2 * n, n), (n + 1) * 4 ** n)
    if name == "l_classical":
        return (-s) ** n * sigma(m, n)
    if name == "v_classical":
        return (s / 4) ** n * sigma(m, n)
    if name == "l_q":
        return (-s) ** n * sigma_q(m, n)
    if name == "v_q":
        return (qpow(1) * s) ** n * sigma_q(m, n) / (poch(-1, 1, n) * poch(-1, m + 1, n))
    if name == "h_q":
        return (-s) ** n * qf(2 * n) / qf(n)
    if name == "H_q":
        return (qpow(1) * s) ** n * qf(2 * n) / (poch(-1, 1, n) * qf(n))
    if name == "R_q":
        return qf(m) / qf(m + n)
    if name == "r_q":
        return ONE
    raise ValueError(name)


def moment(functional, n):
    """F(x^{2n}) from the closed moment formula."""
    return _moment_spec(_as_spec(functional), n)


def moment_of_power(functional, i):
    spec = _as_spec(functional)
    if i % 2:
        return spec.one * 0
    return _moment_spec(spec, i // 2)


def moment_by_expansion(functional, i):
    """F(x^i) by expanding x^i in the family basis and reading off p_0."""
    spec = _as_spec(functional)
    return expand_in_basis(spec, Poly.monomial(i, spec.one)).get(0, spec.one * 0)


def apply_functional(functional, poly):
    spec = _as_spec(functional)
    acc = spec.one * 0
    for i, c in enumerate(poly.coefficients):
        if i % 2 == 0 and c:
            acc = acc + c * _moment_spec(spec, i // 2)
    return acc


# -- special values and generating function -----------------------------------

def special_values(spec, n):
    """p_n(1)."""
    return family_poly(spec, n).evaluate(spec.one)


def l_at_one_sequence(m, count, s=-1, q_mode="classical"):
    name = "l_q" if q_mode == "q-exact" else "l_classical"
    spec = FamilySpec(name, m, s)
    return [special_values(spec, n) for n in range(count)]


def genfun_convolution_check(m, s, x, order=10):
    """Compare sum l_n(x,m,s) C(n+m-1,m-1) z^n with 1/(1-xz-sz^2)^m and with
    (sum l_n(x,1,s) z^n)^m to the given order.  Returns a dict of the three
    coefficient lists and a boolean ``ok``."""
    if m < 1:
        raise ValueError("the generating function needs m >= 1")
    s, x = Fraction(s), Fraction(x)
    spec = FamilySpec("l_classical", m, s)
    spec1 = FamilySpec("l_classical", 1, s)
    lhs = Series([family_poly(spec, n).evaluate(x) * binom(n + m - 1, m - 1)
                  for n in range(order + 1)], order)
    base = Series([1, -x, -s], order)
    rhs = Series([1], order) / (base ** m)
    conv = Series([family_poly(spec1, n).evaluate(x) for n in range(order + 1)], order) ** m
    return {
        "lhs": list(lhs.coefficients),
        "rhs": list(rhs.coefficients),
        "power_form": list(conv.coefficients),
        "ok": lhs == rhs and lhs == conv,
    }
