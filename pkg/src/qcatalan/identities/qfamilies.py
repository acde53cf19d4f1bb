"""Identities in Q(q): q-Lucas/Fibonacci, q-Chebyshev and q-Hermite families,
q-weighted paths and the q-binomial sums they produce."""
from math import comb, prod

from ..algebra import Poly, d_q
from ..families import (
    FamilySpec, expansion_coefficients, family_poly,
    family_poly_by_recurrence, lambda_coeff_q, moment_by_expansion, mu_coeff_q, poch, qb,
    qf, qi, sigma, sigma_q, special_values, v_q_alternate,
)
from ..lattice import (
    alternating_sum, brute_force_weight, build_table, c_table, convolution_sum, lambda_q_weights,
    mu_weights,
)
from ..scalar import ONE, QRat, eval_at_q, qpow
from ._common import XQ, iverson, s_points
from .core import SAMPLE_S, SYMBOLIC_Q, grid, register, upto

Q = qpow(1)
ZERO = QRat()


def _qsum(terms):
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc


def _psum(terms):
    acc = Poly([])
    for t in terms:
        acc = acc + t
    return acc


def _pm(e, n, step=1):
    """(-q^e; q^step)_n."""
    return poch(-1, e, n, step)


def _one_q(cond):
    return iverson(cond, ONE)


def _mn(b, m_start=0):
    return grid(m=upto(b.max_m, m_start), n=upto(b.max_n))


def _mns(b, deg=lambda n: n // 2):
    return grid(m=upto(b.max_m), n=upto(b.max_n), s=lambda m, n: s_points(deg(n)))


def _listed_flag(ident, listed, n, value):
    if n < len(listed) and listed[n] != value:
        return f"{ident}: listed entry n={n} differs from the computed value {value}"
    return None


# -- section 2: q-Lucas / q-Fibonacci ------------------------------------------------

@register("eq-2.1", "sigma_q(m,n) = [2n]![m]!/([n]![m+n]!) reduces to sigma(m,n) at q = 1",
          ("m", "n"), SYMBOLIC_Q, _mn)
def _eq_2_1(m, n):
    value = sigma_q(m, n)
    split = qf(2 * n) / qf(n) * (qf(m) / qf(m + n))
    return (value, eval_at_q(value, 1)), (split, sigma(m, n))


def _listed_lq_terms(n, m):
    x, qm = XQ, qpow(m)
    return {
        0: Poly([ONE]),
        1: x,
        2: x ** 2 - Poly([qm * qi(2) / qi(m + 1)]),
        3: x ** 3 - x.scale(qm * qi(2) * qi(3) / qi(m + 2)),
        4: (x ** 4 - (x ** 2).scale(qm * qi(3) * qi(4) / qi(m + 3))
            + Poly([qpow(2 * m + 1) * qi(3) * qi(4) / (qi(m + 2) * qi(m + 3))])),
    }[n]


@register("eq-2.2", "l_n(x,m,-q^m,q) against the listed first terms", ("m", "n"), SYMBOLIC_Q,
          lambda b: grid(m=upto(b.max_m), n=upto(min(4, b.max_n))))
def _eq_2_2(m, n):
    return family_poly(FamilySpec("l_q", m, -qpow(m)), n), _listed_lq_terms(n, m)


@register("eq-2.3", "closed form satisfies l_n = (x - (1-q)s q^{-m} D_q) l_{n-1} + s q^{-m} lambda_{n-2}(m,q) l_{n-2}",
          ("m", "n", "s"), SAMPLE_S, lambda b: grid(m=upto(b.max_m), n=upto(b.max_n, 2),
                                                     s=lambda m, n: s_points(n // 2)))
def _eq_2_3(m, n, s):
    spec = FamilySpec("l_q", m, s)
    p1, p2 = family_poly(spec, n - 1), family_poly(spec, n - 2)
    sqm = spec.s * qpow(-m)
    rhs = XQ * p1 - d_q(p1).scale((ONE - Q) * sqm) + p2.scale(sqm * lambda_coeff_q(n - 2, m))
    return (family_poly(spec, n), family_poly_by_recurrence(spec, n)), (rhs, rhs)


def _c25(n, k, m):
    if n == 0:
        return ONE
    return ((-1) ** k * qpow(comb(k, 2) + m * k) * qb(n - k, k) * qf(n) / qf(n - k)
            * qf(m + n - k - 1) / qf(m + n - 1))


@register("eq-2.5", "s = -q^m: operator recurrence and c(n,k) = (-1)^k q^{C(k,2)+mk} [n-k,k] ... with its recursion",
          ("m", "n"), SYMBOLIC_Q, lambda b: grid(m=upto(b.max_m), n=upto(b.max_n, 2)))
def _eq_2_5(m, n):
    spec = FamilySpec("l_q", m, -qpow(m))
    p, p1, p2 = (family_poly(spec, n - i) for i in range(3))
    rhs = XQ * p1 + d_q(p1).scale(ONE - Q) - p2.scale(lambda_coeff_q(n - 2, m))
    ks = range(n // 2 + 1)
    coeffs = [p.coefficients[n - 2 * k] for k in ks]
    closed = [_c25(n, k, m) for k in ks]

    def c(nn, k):
        return _c25(nn, k, m) if 0 <= k <= nn // 2 else ZERO

    rec = [c(n - 1, k) + (ONE - qpow(n + 1 - 2 * k)) * c(n - 1, k - 1)
           - lambda_coeff_q(n - 2, m) * c(n - 2, k - 1) for k in ks]
    return (p, coeffs, closed), (rhs, closed, rec)


@register("eq-2.6", "x^n = sum (-s)^k [n]!/([k]![n-2k]!) [n+m-2k]!/[n+m-k]! l_{n-2k}(x,m,s,q)",
          ("m", "n", "s"), SAMPLE_S, _mns)
def _eq_2_6(m, n, s):
    spec = FamilySpec("l_q", m, s)
    rhs = _psum(family_poly(spec, n - 2 * k).scale((-spec.s) ** k * qf(n) * qf(n + m - 2 * k)
                                                     / (qf(k) * qf(n - 2 * k) * qf(n + m - k)))
                for k in range(n // 2 + 1))
    return Poly.monomial(n, ONE), rhs


@register("eq-2.7", "Lambda_{m,q}(x^{2n}) = q^{mn} sigma_q(m,n), odd moments vanish", ("m", "n"),
          SYMBOLIC_Q, _mn)
def _eq_2_7(m, n):
    spec = FamilySpec("l_q", m, -qpow(m))
    return ((moment_by_expansion(spec, 2 * n), moment_by_expansion(spec, 2 * n + 1)),
            (qpow(m * n) * sigma_q(m, n), ZERO))


@register("eq-2.8", "m = 1 expansions of x^{2n} and x^{2n-1} in both stated forms", ("n",),
          SYMBOLIC_Q, lambda b: grid(n=upto(b.max_n)))
def _eq_2_8(n):
    spec = FamilySpec("l_q", 1, -Q)
    even_a = _psum(family_poly(spec, 2 * k).scale(
        qpow(n - k) * qf(2 * n) * qi(2 * k + 1) / (qf(n - k) * qf(n + 1 + k))) for k in range(n + 1))
    even_b = _psum(family_poly(spec, 2 * k).scale(qb(2 * n, n - k) - qb(2 * n, n - k - 1))
                   for k in range(n + 1))
    if n == 0:
        return (even_a, even_b), (Poly([ONE]), Poly([ONE]))
    odd_a = _psum(family_poly(spec, 2 * k - 1).scale(
        qpow(n - k) * qf(2 * n - 1) * qi(2 * k) / (qf(n - k) * qf(n + k))) for k in range(1, n + 1))
    odd_b = _psum(family_poly(spec, 2 * k - 1).scale(qb(2 * n - 1, n - k) - qb(2 * n - 1, n - k - 1))
                  for k in range(1, n + 1))
    even, odd = Poly.monomial(2 * n, ONE), Poly.monomial(2 * n - 1, ONE)
    return (even_a, even_b, odd_a, odd_b), (even, even, odd, odd)


@register("eq-2.10", "h_n satisfies the four-term recurrence", ("n", "s"), SAMPLE_S,
          lambda b: grid(n=upto(b.max_n + 2, 2), s=lambda n: s_points(n // 2)))
def _eq_2_10(n, s):
    spec = FamilySpec("h_q", 0, s)
    s = spec.s
    h = lambda i: family_poly(spec, i)
    rhs = XQ * h(n - 1) + h(n - 2).scale(qpow(n - 2) * (ONE + Q) * qi(n - 1) * s)
    if n >= 4:
        rhs = rhs + h(n - 4).scale((ONE - Q) * qpow(n - 3) * s * s * qi(n - 1) * qi(n - 2) * qi(n - 3))
    return (h(n), family_poly_by_recurrence(spec, n)), (rhs, h(n))


@register("rem-2.h", "x^n = sum (-s)^k [n]!/([k]![n-2k]!) h_{n-2k}, moments of h_n(x,-1,q) are [2n]!/[n]!",
          ("n", "s"), SAMPLE_S, lambda b: grid(n=upto(b.max_n), s=lambda n: s_points(n // 2)))
def _rem_2_h(n, s):
    spec = FamilySpec("h_q", 0, s)
    rhs = _psum(family_poly(spec, n - 2 * k).scale((-spec.s) ** k * qf(n) / (qf(k) * qf(n - 2 * k)))
                for k in range(n // 2 + 1))
    mom = moment_by_expansion(FamilySpec("h_q", 0, -1), 2 * n)
    return (Poly.monomial(n, ONE), mom), (rhs, qf(2 * n) / qf(n))


@register("rem-2.R", "inverse expansion of R(n,m,q) and moments [m]!/[m+n]!", ("m", "n"), SYMBOLIC_Q,
          _mn, notes=("bracket top index read as floor(n/2)",))
def _rem_2_r_big(m, n):
    spec = FamilySpec("R_q", m)
    rhs = _psum(family_poly(spec, n - 2 * k).scale(
        qb(n // 2, k) / prod((qi(m + n - k - j) for j in range(k)), start=ONE))
        for k in range(n // 2 + 1))
    return (Poly.monomial(n, ONE), moment_by_expansion(spec, 2 * n)), (rhs, qf(m) / qf(m + n))


@register("rem-2.r", "r_n moments are 1 and r_{2n} = prod (x^2 - q^j), r_{2n+1} = x r_{2n}", ("n",),
          SYMBOLIC_Q, lambda b: grid(n=upto(b.max_n)),
          notes=("bracket top index read as floor(n/2)",))
def _rem_2_r(n):
    spec = FamilySpec("r_q", 0)
    product = Poly([ONE])
    for j in range(n):
        product = product * (XQ ** 2 - Poly([qpow(j)]))
    return ((family_poly(spec, 2 * n), family_poly(spec, 2 * n + 1), moment_by_expansion(spec, 2 * n)),
            (product, XQ * product, ONE))


def _l_at_one(m, n):
    return special_values(FamilySpec("l_q", m, -1), n)


L11_LISTED = (ONE, ONE, ZERO, -Q, -qpow(2), ZERO, qpow(5), qpow(7), ZERO, -qpow(12), -qpow(15), ZERO)


@register("eq-2.11", "l_n(1,1,-1,q) against the reference values", ("n",), SYMBOLIC_Q,
          lambda b: grid(n=range(len(L11_LISTED))))
def _eq_2_11(n):
    return _l_at_one(1, n), L11_LISTED[n]


def _seq_range(b):
    return upto(2 * b.max_n)


@register("eq-2.12", "pentagonal closed forms for l_n(1,1,-1,q) and l_{3n+i} + q^{3n-2+i} l_{3n-3+i} = 0",
          ("n",), SYMBOLIC_Q, lambda b: grid(n=_seq_range(b)))
def _eq_2_12(n):
    t, r = divmod(n, 3)
    value = _l_at_one(1, n)
    closed = ZERO if r == 2 else (-1) ** t * qpow(t * (3 * t - 1) // 2 if r == 0 else t * (3 * t + 1) // 2)
    rec = value + qpow(n - 2) * _l_at_one(1, n - 3) if n >= 3 else ZERO
    return (value, rec), (closed, ZERO)


L10_LISTED = (ONE, ONE, -Q, -Q - qpow(2), -qpow(2), qpow(5), qpow(5) + qpow(7), -qpow(12))


@register("eq-2.13", "l_n(x,0,-1,q) = l_n(x,1,-1,q) - q^{n-1} l_{n-2}(x,1,-1,q); reference values as a flag",
          ("n",), SYMBOLIC_Q, lambda b: grid(n=_seq_range(b)))
def _eq_2_13(n):
    lhs = family_poly(FamilySpec("l_q", 0, -1), n)
    rhs = family_poly(FamilySpec("l_q", 1, -1), n)
    if n >= 2:
        rhs = rhs - family_poly(FamilySpec("l_q", 1, -1), n - 2).scale(qpow(n - 1))
    return lhs, rhs, _listed_flag("eq-2.13", L10_LISTED, n, _l_at_one(0, n))


L2_LISTED = (ONE, ONE + Q, qpow(2), -Q * (ONE + Q), -qpow(2) * (ONE + Q) * (ONE + qpow(2)),
              -qpow(6) * (ONE + Q), qpow(5) * (ONE + Q + qpow(2)))


def _f214(n, i):
    k = 3 * n + i
    return _l_at_one(2, k) * qi(k + 1) if n >= 0 else ZERO


@register("eq-2.14", "l_n(1,2,-1,q)[n+1]: reference values, closed forms and the four-term recurrence",
          ("n",), SYMBOLIC_Q, lambda b: grid(n=_seq_range(b)))
def _eq_2_14(n):
    value = _l_at_one(2, n) * qi(n + 1)
    t, r = divmod(n, 3)
    if r == 0:
        closed = (-1) ** t * qpow(t * (3 * t - 1) // 2) * qi(t + 1)
    elif r == 1:
        closed = (-1) ** t * qpow(t * (3 * t + 1) // 2) * qi(t + 1) * (ONE + qpow(t + 1))
    else:
        closed = (-1) ** t * qpow((3 * t * t + 5 * t + 4) // 2) * qi(t + 1)
    listed = L2_LISTED[n] if n < len(L2_LISTED) else value
    rec = ZERO
    if t >= 3:
        rec = (_f214(t, r) + qpow(3 * t - 2 + r) * qi(3) * _f214(t - 1, r)
               + qpow(6 * t - 6 + 2 * r) * qi(3) * _f214(t - 2, r) + qpow(9 * t - 12 + 3 * r) * _f214(t - 3, r))
    return (value, value, rec), (closed, listed, ZERO)


# -- section 3: q-Chebyshev ----------------------------------------------------------

def _listed_vq_terms(n, m, s):
    x = XQ
    return {
        0: Poly([ONE]),
        1: x,
        2: x ** 2 - Poly([Q * s / qi(2 * m + 2)]),
        3: x ** 3 - x.scale(Q * qi(3) * s / qi(2 * m + 4)),
        4: (x ** 4 - (x ** 2).scale(Q * (ONE + qpow(2)) * qi(3) * s / qi(2 * m + 6))
            + Poly([qpow(4) * qi(3) * s * s / (qi(2 * m + 4) * qi(2 * m + 6))])),
    }[n]


@register("eq-3.1", "v_n(x,m,s,q): listed first terms and the q-binomial coefficient form",
          ("m", "n", "s"), SAMPLE_S, _mns)
def _eq_3_1(m, n, s):
    spec = FamilySpec("v_q", m, s)
    v = family_poly(spec, n)
    listed = _listed_vq_terms(n, m, spec.s) if n <= 4 else v
    return (v, v), (listed, v_q_alternate(m, s, n))


@register("eq-3.2", "closed form satisfies v_n = x v_{n-1} - s lambda_{n-2}(m,q) q^{n-1}/((1+q^{n+m-2})(1+q^{n+m-1})) v_{n-2}",
          ("m", "n", "s"), SAMPLE_S, lambda b: grid(m=upto(b.max_m), n=upto(b.max_n, 2),
                                                     s=lambda m, n: s_points(n // 2)))
def _eq_3_2(m, n, s):
    spec = FamilySpec("v_q", m, s)
    c = spec.s * lambda_coeff_q(n - 2, m) * qpow(n - 1) / ((ONE + qpow(n + m - 2)) * (ONE + qpow(n + m - 1)))
    rhs = XQ * family_poly(spec, n - 1) - family_poly(spec, n - 2).scale(c)
    return (family_poly(spec, n), family_poly_by_recurrence(spec, n)), (rhs, rhs)


@register("eq-3.3", "x^n in the v_k(x,m,s,q) basis", ("m", "n", "s"), SAMPLE_S, _mns)
def _eq_3_3(m, n, s):
    spec = FamilySpec("v_q", m, s)
    rhs = _psum(family_poly(spec, n - 2 * k).scale(
        qf(n) * qf(n + m - 2 * k) / (qf(k) * qf(n - 2 * k) * qf(n + m - k))
        * qpow(k) * spec.s ** k / (_pm(1, k) * _pm(n + m + 1 - 2 * k, k)))
        for k in range(n // 2 + 1))
    return Poly.monomial(n, ONE), rhs


@register("eq-3.4", "Phi_{m,q}(x^{2n}) in both stated forms", ("m", "n"), SYMBOLIC_Q, _mn)
def _eq_3_4(m, n):
    mom = moment_by_expansion(FamilySpec("v_q", m, 1), 2 * n)
    norm = qpow(n) / (_pm(1, n) * _pm(m + 1, n))
    return (mom, mom), (qb(2 * n, n) * qf(n) * qf(m) / qf(n + m) * norm, norm * sigma_q(m, n))


@register("eq-3.5", "H_n(x,s,q): recurrence and moments (qs)^n [2n]!/((-q;q)_n [n]!) = (qs)^n [2n-1]!!",
          ("n", "s"), SAMPLE_S, lambda b: grid(n=upto(b.max_n), s=lambda n: s_points(n)),
          notes=("recurrence H_n = x H_{n-1} - s q^{n-1}[n-1] H_{n-2} is the m -> infinity limit",))
def _eq_3_5(n, s):
    spec = FamilySpec("H_q", 0, s)
    mom = moment_by_expansion(spec, 2 * n)
    first = (Q * spec.s) ** n * qf(2 * n) / (_pm(1, n) * qf(n))
    double = (Q * spec.s) ** n * prod((qi(2 * j - 1) for j in range(1, n + 1)), start=ONE)
    return (family_poly_by_recurrence(spec, n), mom, mom), (family_poly(spec, n), first, double)


def _q2_poly(m, n):
    terms = Poly([])
    for k in range(n // 2 + 1):
        c = (-1) ** k * qpow(2 * comb(k, 2)) * qb(n // 2, k, 2) / prod(
            (qi(2 * (m + n - j)) for j in range(1, k + 1)), start=ONE)
        terms = terms + Poly.monomial(n - 2 * k, c)
    return terms


def _q2_moment(m, n):
    """Constant term of x^{2n} expanded in the _q2_poly basis."""
    rest, out = Poly.monomial(2 * n, ONE), ZERO
    while not rest.is_zero():
        d, c = rest.degree, rest.leading()
        if d == 0:
            out = c
        rest = rest - _q2_poly(m, d).scale(c)
    return out


@register("rem-3.q2", "[m]!/([m+n]!(-q^{m+1};q)_n) = 1/prod [2m+2j] is the moment sequence of the base-q^2 family",
          ("m", "n"), SYMBOLIC_Q, _mn, notes=("bracket top index read as floor(n/2)",))
def _rem_3_q2(m, n):
    seq = qf(m) / (qf(m + n) * _pm(m + 1, n))
    return (seq, _q2_moment(m, n)), (1 / prod((qi(2 * m + 2 * j) for j in range(1, n + 1)), start=ONE),
                                     seq)


# -- section 3: mu-weighted paths ------------------------------------------------------

def _b_closed(n, k, m):
    return (qb(2 * n, n - k) * qf(n + k) * qf(m + 2 * k) / (qf(2 * k) * qf(n + m + k))
            * qpow(n - k) / (_pm(1, n - k) * _pm(m + 1 + 2 * k, n - k)))


def _nk(b, m_max=None):
    return grid(m=upto(b.max_m if m_max is None else m_max), n=upto(b.max_n),
                k=lambda m, n: upto(n))


@register("rem-3.b", "mu-table b(2n,2k,m,q) = a(2n,n-k,m,q) = closed form (and its m = 0 form)",
          ("m", "n", "k"), SYMBOLIC_Q, _nk)
def _rem_3_b(m, n, k):
    val = build_table(mu_weights(m), 2 * n).b(2 * n, 2 * k)
    a = expansion_coefficients(FamilySpec("v_q", m, 1), 2 * n)[n - k]
    closed = _b_closed(n, k, m)
    m0 = qb(2 * n, n - k) * qpow(n - k) / (_pm(1, n - k) * _pm(1 + 2 * k, n - k)) if m == 0 else closed
    return (val, a, val), (closed, closed, m0)


@register("rem-3.c", "c(2n,2k,m,q) closed forms for the mu-weighted paths (and the m = 0 form)",
          ("m", "n", "k"), SYMBOLIC_Q, _nk)
def _rem_3_c(m, n, k):
    w = mu_weights(m)
    val = c_table(w, build_table(w, 2 * n))[(2 * n, 2 * k)]
    if k == 0:
        b0 = _b_closed(n, 0, m)
        return val, b0
    closed = (_b_closed(n, k, m) * qpow(k + 2 * k * k) * poch(1, 1, 2 * k) * poch(1, 2 * m + 1, 2 * k - 1)
              / (poch(1, m + 1, 2 * k - 1) ** 2 * _pm(m + 1, 2 * k - 1) ** 2 * (ONE - qpow(2 * m + 4 * k))))
    m0 = closed
    if m == 0:
        m0 = (qb(2 * n, n - k) * qpow(n + 2 * k * k)
              / (_pm(1, n - k) * _pm(1 + 2 * k, n - k) * _pm(1, 2 * k - 1) * _pm(1, 2 * k)))
    return (val, val), (closed, m0)


@register("lem-1-q", "enumerated mu-weighted paths equal the b(n,k,m,q) recurrence", ("m", "n", "k"),
          SYMBOLIC_Q, lambda b: grid(m=upto(min(b.max_m, 2)), n=upto(min(2 * b.max_n, 12)),
                                     k=lambda m, n: range(n % 2, n + 1, 2)))
def _lem_1_q(m, n, k):
    w = mu_weights(m)
    return brute_force_weight(n, k, w), build_table(w, n).b(n, k)


@register("rem-3.mu-product", "prod_{j<k} mu_{2j}(m,q) = sigma_q(m+k-1,k) q^{k^2}/((-q;q)_k(-q^{k+m};q)_k)",
          ("m", "k"), SYMBOLIC_Q,
          lambda b: grid(m=upto(b.max_m), k=lambda m: upto(b.max_n, 0 if m else 1)),
          flags=("rem-3.mu-product: the reference display uses n for the product length; read with k",))
def _rem_3_mu_product(m, k):
    lhs = prod((mu_coeff_q(2 * j, m) for j in range(k)), start=ONE)
    tail = qpow(k * k) / (_pm(1, k) * _pm(k + m, k))
    return (lhs, lhs), (sigma_q(m + k - 1, k) * tail, qf(2 * k) * qf(k + m - 1) / (qf(k) * qf(2 * k + m - 1)) * tail)


@register("rem-3.alt", "sum (-1)^k b(2n,2k) prod_{j<k} r(2j) = [n=0] for the mu and lambda_q tables",
          ("m", "n"), SYMBOLIC_Q, _mn,
          flags=("rem-3.alt: the reference text pairs the mu-table with lambda_q products; "
                 "the identity holds with each table's own weights",))
def _rem_3_alt(m, n):
    return ((alternating_sum(mu_weights(m), n), alternating_sum(lambda_q_weights(m), n)),
            (_one_q(n == 0), _one_q(n == 0)))


def _nl(b):
    return grid(n=upto(b.max_n), l=upto(b.max_l))


def _eq_3_6_sides(n, ell):
    lhs = qb(2 * n + 2 * ell, n + ell) / _pm(1, n + ell) ** 2
    rhs = qb(2 * n, n) * qb(2 * ell, ell) / (_pm(1, n) ** 2 * _pm(1, ell) ** 2)
    for k in range(1, min(n, ell) + 1):
        rhs = rhs + (qb(2 * n, n - k) * qb(2 * ell, ell - k) * qpow(2 * k * k - k) * (ONE + qpow(2 * k))
                     / (_pm(1, n - k) * _pm(1, n + k) * _pm(1, ell - k) * _pm(1, ell + k)))
    return lhs, rhs


@register("eq-3.6", "q-analogue of the m = 0 convolution, also against the mu(0) path convolution",
          ("n", "l"), SYMBOLIC_Q, _nl)
def _eq_3_6(n, ell):
    lhs, rhs = _eq_3_6_sides(n, ell)
    conv_l, conv_r = convolution_sum(mu_weights(0), n, ell)
    return (lhs, conv_l), (rhs, conv_r)


def _eq_3_7_lhs(n):
    acc = qb(2 * n, n) / _pm(1, n) ** 2
    for k in range(1, n + 1):
        acc = acc + ((-1) ** k * qpow(2 * comb(k, 2)) * qb(2 * n, n - k) * (ONE + qpow(2 * k))
                     / (_pm(1, n - k) * _pm(1, n + k)))
    return acc


@register("eq-3.7", "alternating q-binomial sum with (1+q^{2k})/((-q;q)_{n-k}(-q;q)_{n+k}) is [n=0]",
          ("n",), SYMBOLIC_Q, lambda b: grid(n=upto(b.max_n)))
def _eq_3_7(n):
    return _eq_3_7_lhs(n), _one_q(n == 0)


def _eq_3_8_lhs(n):
    return _qsum((-1) ** k * qpow(2 * comb(k, 2)) * qb(2 * n, n - k) * qi(2 * k + 1) / qi(n + k + 1)
                 * (ONE + qpow(2 * k + 1)) / (_pm(1, n - k) * _pm(1, n + k + 1)) for k in range(n + 1))


@register("eq-3.8", "q-analogue of the (2k+1)/(n+k+1) alternating sum is [n=0]", ("n",), SYMBOLIC_Q,
          lambda b: grid(n=upto(b.max_n)))
def _eq_3_8(n):
    return _eq_3_8_lhs(n), _one_q(n == 0)


def _eq_3_9_lhs(n, m, step=2, qexp=2):
    return _qsum((-1) ** k * qb(n, k, step) * qi(m + 2 * k, step) * qpow(qexp * comb(k, 2))
                 * qf(k + m - 1, step) / qf(n + m + k, step) for k in range(n + 1))


@register("eq-3.9", "sum (-1)^k [n,k]_{q^2} [m+2k]_{q^2} q^{2C(k,2)} [k+m-1]_{q^2}!/[n+m+k]_{q^2}! = [n=0], m > 0",
          ("m", "n"), SYMBOLIC_Q, lambda b: _mn(b, 1),
          notes=("every bracket in base q^2 with q^{2 binom(k,2)}; the base-q variant with "
                 "q^{binom(k,2)} is checked alongside",))
def _eq_3_9(m, n):
    return (_eq_3_9_lhs(n, m), _eq_3_9_lhs(n, m, 1, 1)), (_one_q(n == 0), _one_q(n == 0))


def _eq_3_10_rhs(n, m):
    den = prod((qi(m + i, 2) for i in range(1, 2 * n, 2)), start=ONE)
    return qpow(n) * qf(2 * n, 2) * poch(-1, 0, n, 2) / (qf(n, 2) * _pm(1, 2 * n) * den)


@register("eq-3.10", "sum b(2n,2k,m,q) prod_{j<k} mu_{2j}(m,q) in closed form", ("m", "n"),
          SYMBOLIC_Q, _mn)
def _eq_3_10(m, n):
    return alternating_sum(mu_weights(m), n, sign=1), _eq_3_10_rhs(n, m)


def _eq_3_11_lhs(n, m):
    return _qsum(qb(n, k) * qpow(comb(k, 2)) * qi(m + 2 * k) * qf(m + k - 1) / qf(m + n + k)
                 for k in range(n + 1))


@register("eq-3.11", "sum [n,k] q^{C(k,2)} [m+2k] [m+k-1]!/[m+n+k]! = (-1;q)_n/([m+1][m+3]...[m+2n-1]), m > 0",
          ("m", "n"), SYMBOLIC_Q, lambda b: _mn(b, 1))
def _eq_3_11(m, n):
    den = prod((qi(m + i) for i in range(1, 2 * n, 2)), start=ONE)
    return _eq_3_11_lhs(n, m), poch(-1, 0, n) / den


def _F(n, k, m):
    """F_{n,k}(a) at a = q^m."""
    if k < 0 or k > n:
        return ZERO
    return qb(n, k) * qpow(comb(k, 2)) * (ONE - qpow(2 * k + m)) / poch(1, k + m, n + 1)


@register("eq-3.12", "S_n(q^m) = (-1;q)_n/(q^{m+1};q^2)_n, and (1-q)^n S_n equals the q-binomial sum of eq-3.11, m > 0",
          ("m", "n"), SYMBOLIC_Q, lambda b: _mn(b, 1))
def _eq_3_12(m, n):
    s_n = _qsum(_F(n, k, m) for k in range(n + 1))
    return (s_n, (ONE - Q) ** n * s_n), (poch(-1, 0, n) / poch(1, m + 1, n, 2), _eq_3_11_lhs(n, m))


@register("eq-3.13", "F_{n,k}(a) = F_{n-1,k}(a)/(1-q^n a) + q^{n-1} F_{n-1,k-1}(q^2 a)/(1-q^n a), a = q^m",
          ("m", "n", "k"), SYMBOLIC_Q,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n, 1), k=lambda m, n: upto(n)))
def _eq_3_13(m, n, k):
    d = ONE - qpow(n + m)
    rhs = _F(n - 1, k, m) / d + qpow(n - 1) * _F(n - 1, k - 1, m + 2) / d
    rhs_side = (poch(-1, 0, n - 1) / poch(1, m + 1, n - 1, 2) / d
                + qpow(n - 1) * poch(-1, 0, n - 1) / poch(1, m + 3, n - 1, 2) / d)
    return (_F(n, k, m), poch(-1, 0, n) / poch(1, m + 1, n, 2)), (rhs, rhs_side)

