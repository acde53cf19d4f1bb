"""q-identities specialized at q = 1 against their classical counterparts.

Each check evaluates the q-side exactly at q = 1 (after the normalizer that
the q-version introduces) and compares with the classical side value.
"""
from fractions import Fraction
from math import comb, factorial, prod

from ..families import (
    FamilySpec, lambda_coeff, moment, mu_coeff_q, poch, qb, qf, sigma, sigma_q, special_values,
)
from ..lattice import alternating_sum, convolution_sum, lambda_weights, mu_weights
from ..scalar import eval_at_q, qpow
from . import classical as C
from . import qfamilies as QF
from . import series as S
from ._common import s_points
from .core import PAIRING, grid, register, upto

F = Fraction


def at1(value):
    return eval_at_q(value, 1)


def _nl(b):
    return grid(n=upto(b.max_n), l=upto(b.max_l))


def _n(b):
    return grid(n=upto(b.max_n))


def _mn(b, start=0):
    return grid(m=upto(b.max_m, start), n=upto(b.max_n))


@register("pair-1.18-3.6", "q = 1 in the q-binomial convolution is the m = 0 convolution / 4^{n+l}",
          ("n", "l"), PAIRING, _nl)
def _p_1_18(n, ell):
    ql, qr = QF._eq_3_6_sides(n, ell)
    cl, cr = C._eq_1_18_sides(n, ell)
    scale = 4 ** (n + ell)
    return (at1(ql) * scale, at1(qr) * scale), (cl, cr)


@register("pair-1.16-mu", "mu-weighted path convolution at q = 1 times 4^{n+l} is sigma(m, n+l)",
          ("m", "n", "l"), PAIRING,
          lambda b: grid(m=upto(b.max_m), n=upto(min(b.max_n, 4)), l=upto(min(b.max_l, 4))))
def _p_1_16(m, n, ell):
    ql, qr = convolution_sum(mu_weights(m), n, ell)
    cl, _ = convolution_sum(lambda_weights(m), n, ell)
    scale = 4 ** (n + ell)
    return (at1(ql) * scale, at1(qr) * scale), (cl, sigma(m, n + ell))


@register("pair-1.23-3.7", "q = 1 in the alternating q-binomial sum gives the binomial one", ("n",),
          PAIRING, _n)
def _p_1_23(n):
    return at1(QF._eq_3_7_lhs(n)), C._eq_1_23(n)[0]


@register("pair-1.24-3.8", "q = 1 in the (2k+1)/(n+k+1) q-sum gives the classical sum", ("n",),
          PAIRING, _n)
def _p_1_24(n):
    return at1(QF._eq_3_8_lhs(n)), C._eq_1_24(n)[0]


@register("pair-1.25-3.9", "q = 1 in the base-q^2 alternating sum gives the factorial sum, m > 0",
          ("m", "n"), PAIRING, lambda b: _mn(b, 1))
def _p_1_25(m, n):
    return at1(QF._eq_3_9_lhs(n, m)), C._eq_1_25_terms(n, m, -1)


@register("pair-1.21-mu", "mu alternating sum at q = 1 equals the lambda alternating sum", ("m", "n"),
          PAIRING, _mn)
def _p_1_21(m, n):
    return at1(alternating_sum(mu_weights(m), n)), alternating_sum(lambda_weights(m), n)


@register("pair-1.22-mu", "prod mu_{2j} at q = 1 equals prod lambda_{2j}(m)/4^k", ("m", "k"), PAIRING,
          lambda b: grid(m=upto(b.max_m), k=upto(b.max_n)))
def _p_1_22(m, k):
    q_side = prod((at1(mu_coeff_q(2 * j, m)) for j in range(k)), start=F(1))
    return q_side * 4 ** k, prod((lambda_coeff(2 * j, m) for j in range(k)), start=F(1))


@register("pair-1.26-3.10", "mu-weighted sum of eq-3.10 at q = 1 times 4^n is the classical lambda sum",
          ("m", "n"), PAIRING, _mn)
def _p_1_26(m, n):
    q_side = at1(alternating_sum(mu_weights(m), n, sign=1)) * 4 ** n
    q_rhs = at1(QF._eq_3_10_rhs(n, m)) * 4 ** n
    c_lhs, c_rhs = C._eq_1_26(m, n)
    return (q_side, q_rhs), (c_lhs, c_rhs)


@register("pair-1.27-3.11", "q = 1 in the q-sum gives the classical sum with 2^n/((m+1)...(m+2n-1)), m > 0",
          ("m", "n"), PAIRING, lambda b: _mn(b, 1))
def _p_1_27(m, n):
    return at1(QF._eq_3_11_lhs(n, m)), C._eq_1_25_terms(n, m, 1)


@register("pair-2.7-1.17", "q^{mn} sigma_q(m,n) at q = 1 is sigma(m,n), the l_q and l moment", ("m", "n"),
          PAIRING, _mn)
def _p_2_7(m, n):
    q_side = at1(qpow(m * n) * sigma_q(m, n))
    return (q_side, at1(moment(FamilySpec("l_q", m, -1), n))), (sigma(m, n), moment(FamilySpec("l_classical", m, -1), n))


@register("pair-4.7-4.19", "q-tangent coefficients of v_{2n+1} at q = 1 are the classical ones, m > 0",
          ("m", "n", "k"), PAIRING,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n), k=lambda m, n: upto(n)))
def _p_4_7(m, n, k):
    return at1(S._a419(n, k, m)), C._a43(n, k, m)


@register("pair-4.12-4.24", "q = 1 in the q-coefficient form is 2^n times the classical eq-4.12 sum",
          ("m", "n", "s"), PAIRING,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n), s=lambda m, n: s_points(n // 2)))
def _p_4_12(m, n, s):
    spec = FamilySpec("v_q", m, s)
    cspec = FamilySpec("v_classical", m, s)
    q_lhs = sum((at1((-1) ** k * qb(n, k) * poch(-1, 0, n - k) * poch(-1, m, k) * qf(m + k - 1)
                     / qf(2 * m + k - 1) * special_values(spec, k)) for k in range(n + 1)), F(0))
    c_lhs = sum(((-1) ** k * comb(n, k) * F(factorial(m + k - 1), factorial(2 * m + k - 1))
                 * special_values(cspec, k) for k in range(n + 1)), F(0))
    return q_lhs, 2 ** n * c_lhs


@register("pair-4.13-4.25", "q = 1 in the s^j coefficient sum equals the classical eq-4.13 sum",
          ("m", "n", "j"), PAIRING,
          lambda b: grid(m=upto(b.max_m, 1), n=upto(b.max_n), j=lambda m, n: upto(min(b.max_j, n // 2))))
def _p_4_13(m, n, j):
    return at1(S._eq_4_25(m, n, j)[0]), C._eq_4_13(m, n, j)[0]
