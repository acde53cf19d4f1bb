"""Identities for v_n(x,m,s,q) as polynomials in s: q-tangent expansions and
their generating functions."""
from fractions import Fraction
from math import comb, prod

from ..algebra import Poly, Series, e_q_series
from ..families import FamilySpec, family_poly, poch, qb, qf, qi, special_values
from ..scalar import ONE, QRat, eval_at_q, qpow
from ._common import XQ, q_tangent, s_points, series_s_points, tangent
from .core import SAMPLE_S, SERIES, SYMBOLIC_Q, grid, register, upto

Q = qpow(1)
ZERO = QRat()
ORD = "ordinary"


def _pm(e, n, step=1):
    return poch(-1, e, n, step)


def _psum(terms):
    acc = Poly([])
    for t in terms:
        acc = acc + t
    return acc


def _vq(m, s, n):
    return family_poly(FamilySpec("v_q", m, s), n)


@register("eq-4.18", "v_n(1,m,1/q,q) = q^{C(n,2)} [2m+n-1]...[2m+1]/([2m+2n-2]...[2m+2])", ("m", "n"),
          SYMBOLIC_Q, lambda b: grid(m=upto(b.max_m), n=upto(b.max_n + 2)))
def _eq_4_18(m, n):
    value = special_values(FamilySpec("v_q", m, 1 / Q), n)
    num = prod((qi(2 * m + i) for i in range(1, n)), start=ONE)
    den = prod((qi(2 * m + 2 * i) for i in range(1, n)), start=ONE)
    return value, qpow(comb(n, 2)) * num / den


def _a419(n, k, m):
    return ((-1) ** k * qb(2 * n + 1, 2 * k + 1) * qf(2 * m + 2 * n) * qf(m + 2 * n - 2 * k - 1)
            / (qf(m + 2 * n) * qf(2 * m + 2 * n - 2 * k - 1)) * q_tangent(k) / _pm(m + 2 * n - 2 * k, 2 * k + 1))


@register("eq-4.19", "v_{2n+1}(x,m,s,q) = sum a_q(n,k,m) x^{2k+1} v_{2n-2k} with q-tangent numbers, m > 0",
          ("m", "n", "s"), SAMPLE_S,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(max(0, b.max_n - 2)), s=lambda m, n: s_points(n)))
def _eq_4_19(m, n, s):
    rhs = _psum((XQ ** (2 * k + 1) * _vq(m, s, 2 * n - 2 * k)).scale(_a419(n, k, m)) for k in range(n + 1))
    return _vq(m, s, 2 * n + 1), rhs


def _tq_listed():
    one_q = ONE + Q
    return (ONE, Q * one_q, qpow(2) * one_q ** 2 * (ONE + qpow(2)) ** 2,
            qpow(3) * one_q ** 2 * (ONE + qpow(2)) * (ONE + qpow(3))
            * sum((qpow(i) * c for i, c in enumerate((1, 1, 3, 2, 3, 2, 3, 1, 1))), ZERO))


def _eq(order):
    return e_q_series(order).retag(ORD)


def _tan_q(order):
    e = _eq(order)
    return (e - e.negate_argument()) / (e + e.negate_argument())


@register("eq-4.20", "q-tangent numbers from (e_q(z)-e_q(-z))/(e_q(z)+e_q(-z)); reference values; T(1) = T",
          ("n",), SERIES, lambda b: grid(n=upto(max(0, (b.order - 1) // 2))))
def _eq_4_20(n):
    N = 2 * n + 1
    coeff = _tan_q(N).coefficient(N)
    listed = _tq_listed()
    tq = q_tangent(n)
    return ((coeff, tq if n >= len(listed) else listed[n], eval_at_q(tq, 1)),
            ((-1) ** n * tq / qf(N), tq, Fraction(tangent(n))))


def _Vq(m, s, order):
    spec = FamilySpec("v_q", m, s)
    return Series([qf(m + n - 1) * _pm(m, n) / qf(2 * m + n - 1) * special_values(spec, n) / qf(n)
                   for n in range(order + 1)], order)


def _E(order):
    return Series([poch(-1, 0, n) / qf(n) for n in range(order + 1)], order)


def _ms(b):
    return grid(N=(b.order,), m=upto(b.max_m, 1), s=lambda N, m: series_s_points(N))


@register("eq-4.22", "V_m(z) - V_m(-z) = q-tanh(z) (V_m(z) + V_m(-z))", ("N", "m", "s"), SERIES, _ms,
          notes=("order-limited: coefficients compared through the configured series order",))
def _eq_4_22(N, m, s):
    V = _Vq(m, s, N)
    return V - V.negate_argument(), _tan_q(N) * (V + V.negate_argument())


@register("eq-4.23", "e_q(z)/e_q(-z) V_m(-z,q) = V_m(z,q), with e_q(z)/e_q(-z) = sum (-1;q)_n z^n/[n]!",
          ("N", "m", "s"), SERIES, _ms,
          notes=("order-limited: coefficients compared through the configured series order",))
def _eq_4_23(N, m, s):
    V, E = _Vq(m, s, N), _E(N)
    e = _eq(N)
    return (E * V.negate_argument(), e / e.negate_argument()), (V, E)


@register("eq-4.24", "coefficient form of the V_m functional equation", ("m", "n", "s"), SAMPLE_S,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n), s=lambda m, n: s_points(n // 2)))
def _eq_4_24(m, n, s):
    spec = FamilySpec("v_q", m, s)
    lhs = sum(((-1) ** k * qb(n, k) * poch(-1, 0, n - k) * _pm(m, k) * qf(m + k - 1) / qf(2 * m + k - 1)
               * special_values(spec, k) for k in range(n + 1)), ZERO)
    return lhs, qf(m + n - 1) * _pm(m, n) / qf(2 * m + n - 1) * special_values(spec, n)


@register("eq-4.25", "coefficient of s^j in the V_m functional equation equals 1", ("m", "n", "j"),
          SYMBOLIC_Q,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n), j=lambda m, n: upto(min(b.max_j, n // 2))))
def _eq_4_25(m, n, j):
    lhs = ZERO
    for k in range(2 * j, n + 1):
        lhs = lhs + ((-1) ** k * poch(-1, 0, n - k) * _pm(m, k) * _pm(n + m - j, j)
                     / (_pm(m, n) * _pm(k + m - j, j))
                     * qf(2 * m + n - 1) * qf(m + k - j - 1) * qf(n - 2 * j)
                     / (qf(n - k) * qf(2 * m + k - 1) * qf(k - 2 * j) * qf(m + n - j - 1)))
    return lhs, ONE


def _poch_any(sign, e, n):
    """(sign q^e; q)_n for any integer e."""
    return prod((ONE - sign * qpow(e + i) for i in range(n)), start=ONE)


def _saalschutz(n, a, b, c):
    """Both sides of q-Pfaff-Saalschutz for (sign, exponent) pairs a, b, c."""
    (sa, ea), (sb, eb), (sc, ec) = a, b, c
    sd, ed = sa * sb * sc, ea + eb - ec + 1 - n
    lhs = ZERO
    for k in range(n + 1):
        lhs = lhs + (_poch_any(sa, ea, k) * _poch_any(sb, eb, k) * _poch_any(1, -n, k) * qpow(k)
                     / (_poch_any(sc, ec, k) * _poch_any(sd, ed, k) * _poch_any(1, 1, k)))
    rhs = (_poch_any(sc * sa, ec - ea, n) * _poch_any(sc * sb, ec - eb, n)
           / (_poch_any(sc, ec, n) * _poch_any(sc * sa * sb, ec - ea - eb, n)))
    return lhs, rhs


@register("eq-4.26", "q-Pfaff-Saalschutz for a = q^alpha, b = -q^beta, c = q^gamma and the instance used for the s^j sums",
          ("n", "alpha", "beta", "gamma"), SYMBOLIC_Q,
          lambda b: grid(n=upto(b.max_n), alpha=(1, 2), beta=(0, 1, 2), gamma=(1, 2, 3)))
def _eq_4_26(n, alpha, beta, gamma):
    lhs, rhs = _saalschutz(n, (1, alpha), (-1, beta), (1, gamma))
    # the instance a = q^{m+j}, b = -q^{m+j}, c = q^{2m+2j} with m + j = alpha
    il, ir = _saalschutz(n, (1, alpha), (-1, alpha), (1, 2 * alpha))
    return (lhs, il), (rhs, ir)


def _V27(m, N):
    M = N + 2 * m - 1
    E = _E(M)
    num = Series([ZERO], M)
    for k in range(m):
        dfact = prod((qi(i) for i in range(1, 2 * k, 2)), start=ONE)
        c = (-1) ** k * qpow(comb(m - 1 - k, 2)) * qb(m + k - 1, 2 * k) * dfact
        num = num + (E + Series([ONE * (-1) ** (m + k)], M)).shift(m - 1 - k).truncate(M).scale(c)
    num = num.scale(ONE / (qpow((m - 1) ** 2) * poch(-1, 0, m)))
    return num.shift(-(2 * m - 1))


@register("eq-4.27", "closed form of V_m(z,q,0) with E(z) = e_q(z)/e_q(-z)", ("N", "m"), SERIES,
          lambda b: grid(N=(b.order,), m=upto(b.max_m, 1)),
          notes=("numerator expanded to order N+2m-1, then divided by z^{2m-1}",))
def _eq_4_27(N, m):
    return _V27(m, N), _Vq(m, Fraction(0), N)


@register("eq-4.28", "H_{2n+1} = sum (-1)^k [2n+1,2k+1] T_{2k+1}(q) x^{2k+1} H_{2n-2k}", ("n", "s"),
          SAMPLE_S, lambda b: grid(n=upto(max(0, b.max_n - 1)), s=lambda n: s_points(n)))
def _eq_4_28(n, s):
    H = lambda i: family_poly(FamilySpec("H_q", 0, s), i)
    rhs = _psum((XQ ** (2 * k + 1) * H(2 * n - 2 * k)).scale((-1) ** k * qb(2 * n + 1, 2 * k + 1) * q_tangent(k))
                for k in range(n + 1))
    return H(2 * n + 1), rhs


@register("rem-4.hermite", "sum H_n(1,s,q) z^n/[n]! = e_q(z)/e_{q^2}(q s z^2/[2]), and it satisfies the V_m equation",
          ("N", "s"), SERIES, lambda b: grid(N=(b.order,), s=lambda N: series_s_points(N)),
          flags=("rem-4.hermite: the reference generating function divides by [n]; it must be [n]! "
                 "for the stated product form",))
def _rem_4_hermite(N, s):
    spec = FamilySpec("H_q", 0, s)
    h = Series([special_values(spec, n) / qf(n) for n in range(N + 1)], N)
    w = Q * spec.s / qi(2)
    den = Series([w ** (n // 2) / qf(n // 2, 2) if n % 2 == 0 else ZERO for n in range(N + 1)], N)
    return (h, _E(N) * h.negate_argument()), (_eq(N) / den, h)
