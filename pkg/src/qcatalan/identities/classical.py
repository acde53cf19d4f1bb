"""Identities over the rationals: classical families, paths, tangent numbers."""
from fractions import Fraction
from math import comb, factorial, prod

from ..algebra import Poly, Series, exp_series
from ..families import (
    FamilySpec, a_coeff, a_coeff_binomial_form, binom, expand_in_basis, family_poly,
    family_poly_by_recurrence, genfun_convolution_check, lambda_coeff, moment_by_expansion,
    sigma, special_values,
)
from ..lattice import (
    alternating_sum, brute_force_c, brute_force_weight, build_table, c_table, convolution_sum,
    lambda_weights, recurrence_weights,
)
from ._common import (
    X, fam, genocchi, iverson, poly_sum, s_points, series_s_points, solve_odd_expansion, tangent,
)
from .core import EXACT, SAMPLE_S, SERIES, grid, register, upto

F = Fraction


def _super_catalan(m, n):
    return F(factorial(2 * m) * factorial(2 * n), factorial(m) * factorial(n) * factorial(m + n))


def _seq_range(b):
    return upto(2 * b.max_n)


def _n(b):
    return grid(n=upto(b.max_n))


def _nl(b):
    return grid(n=upto(b.max_n), l=upto(b.max_l))


def _mn(b, m_start=0):
    return grid(m=upto(b.max_m, m_start), n=upto(b.max_n))


def _mns(b, m_start=0, deg=lambda n: n // 2):
    return grid(m=upto(b.max_m, m_start), n=upto(b.max_n), s=lambda m, n: s_points(deg(n)))


# -- section 0 -------------------------------------------------------------------

@register("eq-0.2", "Lucas variant: recurrence with lambda_0 = 2, lambda_n = 1", ("n",), EXACT, _n)
def _eq_0_2(n):
    return family_poly_by_recurrence(FamilySpec("lucas"), n), fam("lucas", n)


@register("eq-0.3", "x^n = sum binom(n,k) l_{n-2k}(x)", ("n",), EXACT, _n)
def _eq_0_3(n):
    rhs = poly_sum(fam("lucas", n - 2 * k).scale(F(comb(n, k))) for k in range(n // 2 + 1))
    return Poly.monomial(n, F(1)), rhs


@register("eq-0.4", "Lambda(x^{2n}) = binom(2n,n)", ("n",), EXACT, _n)
def _eq_0_4(n):
    return moment_by_expansion(FamilySpec("lucas"), 2 * n), F(comb(2 * n, n))


@register("eq-0.5", "Fibonacci variant: closed form, recurrence, and l_n = f_n - f_{n-2}",
          ("n",), EXACT, _n)
def _eq_0_5(n):
    f = FamilySpec("fibonacci")
    rel = fam("lucas", n) if n >= 2 else None
    other = fam("fibonacci", n) - fam("fibonacci", n - 2) if n >= 2 else None
    return (family_poly(f, n), rel), (family_poly_by_recurrence(f, n), other)


@register("eq-0.6", "x^n = sum (binom(n,k) - binom(n,k-1)) f_{n-2k}(x)", ("n",), EXACT, _n)
def _eq_0_6(n):
    rhs = poly_sum(fam("fibonacci", n - 2 * k).scale(F(binom(n, k) - binom(n, k - 1)))
                   for k in range(n // 2 + 1))
    return Poly.monomial(n, F(1)), rhs


@register("eq-0.7", "Lambda*(x^{2n}) = Catalan C_n", ("n",), EXACT, _n)
def _eq_0_7(n):
    return moment_by_expansion(FamilySpec("fibonacci"), 2 * n), F(comb(2 * n, n), n + 1)


@register("eq-0.8", "Chebyshev t_n: recurrence and moments binom(2n,n)/4^n", ("n",), EXACT, _n)
def _eq_0_8(n):
    t = FamilySpec("cheb_t")
    return ((family_poly_by_recurrence(t, n), moment_by_expansion(t, 2 * n)),
            (family_poly(t, n), F(comb(2 * n, n), 4 ** n)))


@register("eq-0.9", "Chebyshev u_n: recurrence and moments C_n/4^n", ("n",), EXACT, _n)
def _eq_0_9(n):
    u = FamilySpec("cheb_u")
    return ((family_poly_by_recurrence(u, n), moment_by_expansion(u, 2 * n)),
            (family_poly(u, n), F(comb(2 * n, n), (n + 1) * 4 ** n)))


# -- section 1 -------------------------------------------------------------------

@register("eq-1.1", "sigma(m,n) = S(m,n)/S(m,0) = (2n)! m!/(n!(n+m)!)", ("m", "n"), EXACT, _mn)
def _eq_1_1(m, n):
    return sigma(m, n), _super_catalan(m, n) / _super_catalan(m, 0)


SIGMA_2_LISTED = (F(1), F(2, 3), F(1), F(2), F(14, 3), F(12), F(33), F(286, 3))


@register("eq-1.1-example", "reference values sigma(2, 0..7)", ("n",), EXACT,
          lambda b: grid(n=range(len(SIGMA_2_LISTED))))
def _eq_1_1_example(n):
    return sigma(2, n), SIGMA_2_LISTED[n]


def _listed_l_terms(n, m, s):
    """First terms of l_n(x,m,s) as listed after the closed form."""
    x = X
    table = {
        0: Poly([F(1)]),
        1: x,
        2: x ** 2 + Poly([F(2) * s / (m + 1)]),
        3: x ** 3 + x.scale(F(6) * s / (m + 2)),
        4: x ** 4 + (x ** 2).scale(F(12) * s / (m + 3)) + Poly([F(12) * s * s / ((m + 2) * (m + 3))]),
        5: x ** 5 + (x ** 3).scale(F(20) * s / (m + 4)) + x.scale(F(60) * s * s / ((m + 3) * (m + 4))),
    }
    return table[n]


@register("eq-1.2", "closed form l_n(x,m,s) against the listed first terms", ("m", "n", "s"),
          SAMPLE_S, lambda b: grid(m=upto(b.max_m), n=upto(min(5, b.max_n)),
                                   s=lambda m, n: s_points(n // 2)))
def _eq_1_2(m, n, s):
    return fam("l_classical", n, m, s), _listed_l_terms(n, m, s)


@register("eq-1.3", "l_n = x l_{n-1} + s lambda_{n-2}(m) l_{n-2} reproduces the closed form",
          ("m", "n", "s"), SAMPLE_S, _mns)
def _eq_1_3(m, n, s):
    spec = FamilySpec("l_classical", m, s)
    return family_poly_by_recurrence(spec, n), family_poly(spec, n)


@register("eq-1.4", "lambda_n(m) from the generic formula, and l_{n+2} - x l_{n+1} = lambda_n l_n at s = 1",
          ("m", "n"), EXACT, _mn)
def _eq_1_4(m, n):
    spec = FamilySpec("l_classical", m, 1)
    diff = family_poly(spec, n + 2) - X * family_poly(spec, n + 1)
    generic = F(2, m + 1) if n == 0 else F((n + 1) * (n + 2 * m), (n + m) * (n + m + 1))
    return (lambda_coeff(n, m), diff), (generic, family_poly(spec, n).scale(generic))


L_0_LISTED = (1, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1)
L_1_LISTED = (1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0)
L_2_LISTED = (1, 2, 1, -2, -4, -2, 3, 6, 3, -4, -8, 4)


def _listed_flag(ident, listed, n, value):
    if n < len(listed) and listed[n] != value:
        return f"{ident}: listed entry n={n} is {listed[n]}, computed {value}"
    return None


@register("eq-1.5", "l_n(1,0,-1) has period 6 once l_0 is replaced by 2", ("n",), EXACT,
          lambda b: grid(n=_seq_range(b)))
def _eq_1_5(n):
    value = special_values(FamilySpec("l_classical", 0, -1), n)
    periodic = (2, 1, -1, -2, -1, 1)[n % 6]
    replaced = F(2) if n == 0 else value
    listed = F(L_0_LISTED[n]) if n < len(L_0_LISTED) else value
    return (replaced, value), (F(periodic), listed), _listed_flag("eq-1.5", L_0_LISTED, n, value)


@register("eq-1.6", "l_n(1,1,-1) has period 6", ("n",), EXACT, lambda b: grid(n=_seq_range(b)))
def _eq_1_6(n):
    value = special_values(FamilySpec("l_classical", 1, -1), n)
    listed = F(L_1_LISTED[n]) if n < len(L_1_LISTED) else value
    return (value, value), (F(L_1_LISTED[n % 6]), listed)


@register("eq-1.7", "l_n(1,2,-1)(n+1) closed forms; reference values compared as a flag", ("n",),
          EXACT, lambda b: grid(n=_seq_range(b)))
def _eq_1_7(n):
    value = special_values(FamilySpec("l_classical", 2, -1), n) * (n + 1)
    t, r = divmod(n, 3)
    closed = (-1) ** t * (t + 1) * (2 if r == 1 else 1)
    return value, F(closed), _listed_flag("eq-1.7", L_2_LISTED, n, value)


@register("eq-1.8", "l_n(1,m,-1/4) as a product, both stated forms", ("m", "n"), EXACT, _mn)
def _eq_1_8(m, n):
    value = special_values(FamilySpec("l_classical", m, F(-1, 4)), n)
    first = F(prod(range(2 * m + 1, 2 * m + n)), prod(range(2 * m + 2, 2 * m + 2 * n - 1, 2)))
    second = prod((F(2 * m + 2 * j - 1, 2 * (m + j + (n - 1) // 2)) for j in range(1, n // 2 + 1)),
                  start=F(1))
    return (value, value), (first, second)


@register("eq-1.10", "a(n,k,m): both stated forms and a(n+1,k) = a(n,k) + lambda_{n+1-2k} a(n,k-1)",
          ("m", "n", "k"), EXACT,
          lambda b: grid(m=upto(b.max_m), n=upto(b.max_n), k=lambda m, n: upto(n // 2)))
def _eq_1_10(m, n, k):
    step = a_coeff(n, k, m) + (lambda_coeff(n + 1 - 2 * k, m) * a_coeff(n, k - 1, m) if k else 0)
    return (a_coeff(n, k, m), a_coeff(n + 1, k, m)), (a_coeff_binomial_form(n, k, m), step)


@register("eq-1.11", "x^n = sum a(n,k,m)(-s)^k l_{n-2k}(x,m,s)", ("m", "n", "s"), SAMPLE_S, _mns)
def _eq_1_11(m, n, s):
    rhs = poly_sum(fam("l_classical", n - 2 * k, m, s).scale(a_coeff(n, k, m) * (-s) ** k)
                   for k in range(n // 2 + 1))
    return Poly.monomial(n, F(1)), rhs


@register("eq-1.13", "b(n,k,m) path table gives the coefficients of x^n in the l_k basis",
          ("m", "n", "s"), SAMPLE_S, lambda b: _mns(b, deg=lambda n: n // 2),
          flags=("eq-1.13: stated weight +s*lambda_k(m) gives b(2n,0) = s^n sigma; the "
                 "expansion of x^n in the l_k basis needs r(k) = -s*lambda_k(m), which the table uses",))
def _eq_1_13(m, n, s):
    spec = FamilySpec("l_classical", m, s)
    table = build_table(recurrence_weights(spec), n)
    coeffs = expand_in_basis(spec, Poly.monomial(n, F(1)))
    return [table.b(n, k) for k in range(n + 1)], [coeffs.get(k, F(0)) for k in range(n + 1)]


@register("eq-1.14", "b(2n,2k,m) = a(2n,n-k,m)(-s)^{n-k} = binom(2n,2k) sigma(m+2k,n-k)(-s)^{n-k}",
          ("m", "n", "k", "s"), SAMPLE_S,
          lambda b: grid(m=upto(b.max_m), n=upto(b.max_n), k=lambda m, n: upto(n),
                         s=lambda m, n, k: s_points(n - k)),
          flags=("eq-1.14: last stated form ends in (-s)^k; it must be (-s)^{n-k}",))
def _eq_1_14(m, n, k, s):
    table = build_table(recurrence_weights(FamilySpec("l_classical", m, s)), 2 * n)
    val = table.b(2 * n, 2 * k)
    return ((val, val),
            (a_coeff(2 * n, n - k, m) * (-s) ** (n - k),
             comb(2 * n, 2 * k) * sigma(m + 2 * k, n - k) * (-s) ** (n - k)))


def _lemma_domain(b):
    top = min(2 * b.max_n, 14)
    return grid(m=upto(min(b.max_m, 3)), n=upto(top), k=lambda m, n: range(n % 2, n + 1, 2))


@register("lem-1", "enumerated path weights equal the b(n,k) recurrence (lambda_j(m) weights)",
          ("m", "n", "k"), EXACT, _lemma_domain)
def _lem_1(m, n, k):
    w = lambda_weights(m)
    return brute_force_weight(n, k, w), build_table(w, n).b(n, k)


@register("lem-1-c", "c(2l,2k) = b(2l,2k) prod_{j<2k} r(j) against enumerated paths",
          ("m", "l", "k"), EXACT,
          lambda b: grid(m=upto(min(b.max_m, 3)), l=upto(min(b.max_l, 7)), k=lambda m, l: upto(l)))
def _lem_1_c(m, ell, k):
    w = lambda_weights(m)
    return c_table(w, build_table(w, 2 * ell))[(2 * ell, 2 * k)], brute_force_c(ell, k, w)


@register("eq-1.16", "sum_k b(2n,2k) b(2l,2k) prod r(j) = b(2n+2l,0), lambda_j(m) weights",
          ("m", "n", "l"), EXACT, lambda b: grid(m=upto(b.max_m), n=upto(b.max_n), l=upto(b.max_l)))
def _eq_1_16(m, n, ell):
    return convolution_sum(lambda_weights(m), n, ell)


@register("eq-1.17", "the convolution equals sigma(m, n+l)", ("m", "n", "l"), EXACT,
          lambda b: grid(m=upto(b.max_m), n=upto(b.max_n), l=upto(b.max_l)))
def _eq_1_17(m, n, ell):
    return convolution_sum(lambda_weights(m), n, ell)[0], sigma(m, n + ell)


def _eq_1_18_sides(n, ell):
    lhs = F(comb(2 * n, n) * comb(2 * ell, ell)) + 2 * sum(
        F(comb(2 * n, n + k) * comb(2 * ell, ell + k)) for k in range(1, min(n, ell) + 1))
    return lhs, F(comb(2 * n + 2 * ell, n + ell))


@register("eq-1.18", "m = 0 convolution in binomial form", ("n", "l"), EXACT, _nl)
def _eq_1_18(n, ell):
    return _eq_1_18_sides(n, ell)


@register("eq-1.19", "sum_{k=-n}^{n} binom(2n,n-k) binom(2l,l-k) = binom(2n+2l,n+l)", ("n", "l"),
          EXACT, _nl)
def _eq_1_19(n, ell):
    lhs = sum(F(binom(2 * n, n - k) * binom(2 * ell, ell - k)) for k in range(-n, n + 1))
    return lhs, F(comb(2 * n + 2 * ell, n + ell))


@register("eq-1.20", "m = 1 convolution: (2k+1)^2/((n+k+1)(l+k+1)) form, cross-checked with the "
          "general m = 1 path convolution", ("n", "l"), EXACT, _nl)
def _eq_1_20(n, ell):
    listed = sum(F(binom(2 * n, n - k) * binom(2 * ell, ell - k) * (2 * k + 1) ** 2,
                    (n + k + 1) * (ell + k + 1)) for k in range(n + 1))
    general = convolution_sum(lambda_weights(1), n, ell)[0]
    target = F(comb(2 * n + 2 * ell, n + ell), n + ell + 1)
    return (listed, general), (target, target)


@register("eq-1.21", "sum (-1)^k b(2n,2k) prod_{j<k} r(2j) = [n=0], lambda_j(m) weights",
          ("m", "n"), EXACT, _mn)
def _eq_1_21(m, n):
    return alternating_sum(lambda_weights(m), n), iverson(n == 0)


@register("eq-1.22", "prod_{j<k} lambda_{2j}(m) = sigma(m+k-1, k)", ("m", "k"), EXACT,
          lambda b: grid(m=upto(b.max_m), k=upto(b.max_n)))
def _eq_1_22(m, k):
    lhs = prod((lambda_coeff(2 * j, m) for j in range(k)), start=F(1))
    return lhs, (sigma(m + k - 1, k) if k else F(1))


@register("eq-1.23", "sum_{k=-n}^{n} (-1)^k binom(2n,n-k) = [n=0]", ("n",), EXACT, _n)
def _eq_1_23(n):
    return sum(F((-1) ** k * comb(2 * n, n - k)) for k in range(-n, n + 1)), iverson(n == 0)


@register("eq-1.24", "sum (-1)^k binom(2n,n-k)(2k+1)/(n+k+1) = [n=0]", ("n",), EXACT, _n)
def _eq_1_24(n):
    lhs = sum(F((-1) ** k * comb(2 * n, n - k) * (2 * k + 1), n + k + 1) for k in range(n + 1))
    return lhs, iverson(n == 0)


def _eq_1_25_terms(n, m, sign):
    return sum(F(sign ** k * comb(n, k) * (m + 2 * k) * factorial(m + k - 1), factorial(n + m + k))
               for k in range(n + 1))


@register("eq-1.25", "sum (-1)^k binom(n,k)(m+2k)(m+k-1)!/(n+m+k)! = [n=0], m > 0", ("m", "n"),
          EXACT, lambda b: _mn(b, 1))
def _eq_1_25(m, n):
    return _eq_1_25_terms(n, m, -1), iverson(n == 0)


def _odd_product(m, n):
    return prod(range(m + 1, m + 2 * n, 2))


@register("eq-1.26", "sum b(2n,2k,m) prod lambda_{2j}(m) = 2^{2n}(2n-1)!!/((m+1)(m+3)...(m+2n-1))",
          ("m", "n"), EXACT, _mn)
def _eq_1_26(m, n):
    return (alternating_sum(lambda_weights(m), n, sign=1),
            F(4 ** n * prod(range(1, 2 * n, 2)), _odd_product(m, n)))


@register("eq-1.27", "sum binom(n,k)(m+2k)(m+k-1)!/(n+m+k)! = 2^n/((m+1)(m+3)...(m+2n-1)), m > 0",
          ("m", "n"), EXACT, lambda b: _mn(b, 1))
def _eq_1_27(m, n):
    return _eq_1_25_terms(n, m, 1), F(2 ** n, _odd_product(m, n))


@register("eq-1.28", "sum l_n(x,m,s) binom(n+m-1,m-1) z^n = (1-xz-sz^2)^{-m} = (sum l_n(x,1,s) z^n)^m",
          ("N", "m", "x", "s"), SERIES,
          lambda b: grid(N=(b.order,), m=upto(b.max_m, 1), x=(F(1), F(2), F(-1, 2)),
                         s=lambda N, m, x: series_s_points(N)),
          notes=("order-limited: coefficients compared through the configured series order",))
def _eq_1_28(N, m, x, s):
    out = genfun_convolution_check(m, s, x, N)
    return (out["lhs"], out["lhs"]), (out["rhs"], out["power_form"])


# -- section 4, classical ----------------------------------------------------------

def _listed_v_terms(n, m, s):
    x = X
    return {
        0: Poly([F(1)]),
        1: x,
        2: x ** 2 - Poly([s / (2 * m + 2)]),
        3: x ** 3 - x.scale(3 * s / (2 * m + 4)),
        4: x ** 4 - (x ** 2).scale(3 * s / (m + 3)) + Poly([3 * s * s / ((2 * m + 4) * (2 * m + 6))]),
        5: x ** 5 - (x ** 3).scale(5 * s / (m + 4)) + x.scale(15 * s * s / ((2 * m + 6) * (2 * m + 8))),
    }[n]


@register("eq-4.1", "v_n(x,m,s) = l_n(x,m,-s/4), with the listed first terms", ("m", "n", "s"),
          SAMPLE_S, _mns)
def _eq_4_1(m, n, s):
    v = fam("v_classical", n, m, s)
    listed = _listed_v_terms(n, m, s) if n <= 5 else v
    return (v, v), (fam("l_classical", n, m, -s / 4), listed)


def _a43(n, k, m):
    return ((-1) ** k * comb(2 * n + 1, 2 * k + 1)
            * F(factorial(m + 2 * n - 2 * k - 1) * factorial(2 * m + 2 * n),
                factorial(m + 2 * n) * factorial(2 * m + 2 * n - 2 * k - 1))
            * F(tangent(k), 2 ** (2 * k + 1)))


@register("eq-4.3", "v_{2n+1} = sum a(n,k,m) x^{2k+1} v_{2n-2k}, tangent-number coefficients, m > 0",
          ("m", "n", "s"), SAMPLE_S, lambda b: _mns(b, 1, deg=lambda n: n))
def _eq_4_3(m, n, s):
    rhs = poly_sum((X ** (2 * k + 1) * fam("v_classical", 2 * n - 2 * k, m, s)).scale(_a43(n, k, m))
                   for k in range(n + 1))
    return fam("v_classical", 2 * n + 1, m, s), rhs


@register("eq-4.3-example", "v_5(1,0,s) = 5/2 v_4(1,0,s) - 5/2 v_2(1,0,s) + 1", ("s",), SAMPLE_S,
          lambda b: grid(s=s_points(2)))
def _eq_4_3_example(s):
    v = lambda n: special_values(FamilySpec("v_classical", 0, s), n)
    tform = (comb(5, 1) * F(tangent(0), 2) * v(4) - comb(5, 3) * F(tangent(1), 8) * v(2)
             + comb(5, 5) * F(tangent(2), 16))
    return (v(5), v(5)), (F(5, 2) * v(4) - F(5, 2) * v(2) + 1, tform)


def _a_m0(n, k):
    if k == n:
        return (-1) ** n * F(tangent(n), 4 ** n)
    return (-1) ** k * comb(2 * n + 1, 2 * k + 1) * F(tangent(k), 2 ** (2 * k + 1))


@register("eq-4.5", "m = 0 coefficients a(n,n,0) = (-1)^n T/2^{2n}, a(n,k,0) for k < n, and the "
          "w_n recursion", ("n", "s"), SAMPLE_S,
          lambda b: grid(n=upto(b.max_n), s=lambda n: s_points(n)),
          flags=("eq-4.5: the displayed w_{2n+1} recursion omits (-1)^k; it holds with (-1)^k "
                 "T_{2k+1}/2^{2k+1}, matching the a(n,k,0) coefficients",))
def _eq_4_5(n, s):
    rhs = poly_sum((X ** (2 * k + 1) * fam("v_classical", 2 * n - 2 * k, 0, s)).scale(_a_m0(n, k))
                   for k in range(n + 1))

    def w(k):
        return F(2) if k == 0 else special_values(FamilySpec("v_classical", 0, s), k)

    wsum = sum((-1) ** k * comb(2 * n + 1, 2 * k + 1) * F(tangent(k), 2 ** (2 * k + 1)) * w(2 * n - 2 * k)
               for k in range(n + 1))
    return (fam("v_classical", 2 * n + 1, 0, s), w(2 * n + 1)), (rhs, wsum)


@register("eq-4.7", "coefficients a(n,k,m) solved from v_{2n+1} match the tangent formula, m > 0",
          ("m", "n"), EXACT, lambda b: _mn(b, 1))
def _eq_4_7(m, n):
    return solve_odd_expansion("v_classical", m, n), [_a43(n, k, m) for k in range(n + 1)]


def _w_coeffs(m, s, order):
    spec = FamilySpec("v_classical", m, s)
    return [special_values(spec, n) for n in range(order + 1)]


def _V(m, s, order):
    vals = _w_coeffs(m, s, order)
    return Series([F(factorial(m + n - 1), factorial(2 * m + n - 1)) * vals[n] / factorial(n)
                   for n in range(order + 1)], order)


def _tanh_half(order):
    """(1 - e^{-z})/(1 + e^{-z}) = tanh(z/2)."""
    e = exp_series(order, -1, "ordinary")
    one = Series([1], order)
    return (one - e) / (one + e)


def _ms(b):
    return grid(N=(b.order,), m=upto(b.max_m, 1), s=lambda N, m: series_s_points(N))


@register("eq-4.8", "odd part of V_m equals tangent series times the even part", ("N", "m", "s"), SERIES,
          _ms, notes=("order-limited: coefficients compared through the configured series order",))
def _eq_4_8(N, m, s):
    vals = _w_coeffs(m, s, N)
    lhs = Series([F(factorial(m + n - 1), factorial(2 * m + n - 1)) * vals[n] / factorial(n) if n % 2 else 0
                  for n in range(N + 1)], N)
    tan = Series([(-1) ** (n // 2) * F(tangent(n // 2), 2 ** n * factorial(n)) if n % 2 else 0
                  for n in range(N + 1)], N)
    even = Series([F(factorial(m + n - 1), factorial(2 * m + n - 1)) * vals[n] / factorial(n) if n % 2 == 0
                   else 0 for n in range(N + 1)], N)
    return lhs, tan * even


@register("eq-4.10", "V_m(z) - V_m(-z) = tanh(z/2) (V_m(z) + V_m(-z))", ("N", "m", "s"), SERIES, _ms,
          flags=("eq-4.10: stated right side repeats (V_m(z) - V_m(-z)), which makes the "
                 "identity trivial; checked with (V_m(z) + V_m(-z)) as the odd/even split requires",),
          notes=("order-limited", "canonical form is eq-4.11"))
def _eq_4_10(N, m, s):
    V = _V(m, s, N)
    return V - V.negate_argument(), _tanh_half(V.order) * (V + V.negate_argument())


@register("eq-4.11", "V_m(-z) = e^{-z} V_m(z)", ("N", "m", "s"), SERIES, _ms,
          notes=("order-limited: coefficients compared through the configured series order",))
def _eq_4_11(N, m, s):
    V = _V(m, s, N)
    return V.negate_argument(), exp_series(V.order, -1, "ordinary") * V


@register("eq-4.12", "sum (-1)^k binom(n,k) (m+k-1)!/(2m+k-1)! v_k(1,m,s) = (m+n-1)!/(2m+n-1)! v_n(1,m,s)",
          ("m", "n", "s"), SAMPLE_S, lambda b: _mns(b, 1))
def _eq_4_12(m, n, s):
    spec = FamilySpec("v_classical", m, s)
    c = lambda k: F(factorial(m + k - 1), factorial(2 * m + k - 1))
    lhs = sum((-1) ** k * comb(n, k) * c(k) * special_values(spec, k) for k in range(n + 1))
    return lhs, c(n) * special_values(spec, n)


def _mnj(b):
    return grid(m=upto(b.max_m, 1), n=upto(b.max_n), j=lambda m, n: upto(min(b.max_j, n // 2)))


@register("eq-4.13", "coefficient of s^j in eq-4.12: the factorial sum equals 1", ("m", "n", "j"),
          EXACT, _mnj)
def _eq_4_13(m, n, j):
    f = factorial
    lhs = sum(F((-1) ** k * f(2 * m + n - 1) * f(n - 2 * j) * f(m + k - j - 1),
                f(n - k) * f(2 * m + k - 1) * f(k - 2 * j) * f(m + n - j - 1))
              for k in range(2 * j, n + 1))
    return lhs, F(1)


def _rising(a, k):
    return prod((a + i for i in range(k)), start=1)


@register("eq-4.13-gauss", "shifted form of eq-4.13 and the Gauss summation step", ("m", "n", "j"),
          EXACT, _mnj)
def _eq_4_13_gauss(m, n, j):
    f = factorial
    lhs = sum(F((-1) ** k * f(m + k + j - 1), f(n - k) * f(2 * m + k + 2 * j - 1) * f(k))
              for k in range(n + 1))
    rhs = F(f(m + n + j - 1), f(2 * m + n + 2 * j - 1) * f(n))
    a, bb, c = m + j, -n, 2 * m + 2 * j
    gauss = sum(F(_rising(a, k) * _rising(bb, k), _rising(c, k) * f(k)) for k in range(n + 1))
    gauss_rhs = F(f(c - 1) * f(c - a - bb - 1), f(c - a - 1) * f(c - bb - 1))
    return (lhs, gauss), (rhs, gauss_rhs)


@register("eq-4.14", "a(n,k,1) in tangent and Genocchi form", ("n", "k"), EXACT,
          lambda b: grid(n=upto(b.max_n), k=lambda n: upto(n)))
def _eq_4_14(n, k):
    t_form = (-1) ** k * comb(2 * n + 2, 2 * k + 1) * F(tangent(k), 2 ** (2 * k + 1))
    g_form = (-1) ** k * comb(2 * n + 2, 2 * k + 2) * F(genocchi(k + 1), 2 * n - 2 * k + 1)
    return (t_form, _a43(n, k, 1)), (g_form, t_form)


@register("eq-4.14-example", "v_5(1,1,s) = 3 v_4(1,1,s) - 5 v_2(1,1,s) + 3", ("s",), SAMPLE_S,
          lambda b: grid(s=s_points(2)))
def _eq_4_14_example(s):
    v = lambda n: special_values(FamilySpec("v_classical", 1, s), n)
    gform = (comb(6, 2) * F(genocchi(1), 5) * v(4) - comb(6, 4) * F(genocchi(2), 3) * v(2)
             + comb(6, 6) * genocchi(3))
    return (v(5), v(5)), (3 * v(4) - 5 * v(2) + 3, gform)


TANGENT_LISTED = (1, 2, 16, 272, 7936)
GENOCCHI_LISTED = (0, 1, 1, 3, 17, 155, 2073)


@register("eq-4.4", "tanh series coefficients give T_{2n+1}; reference values", ("n",), SERIES,
          lambda b: grid(n=upto(max(0, (b.order - 1) // 2))))
def _eq_4_4(n):
    N = 2 * n + 1
    e, em = exp_series(N, 1, "ordinary"), exp_series(N, -1, "ordinary")
    tanh = (e - em) / (e + em)
    listed = TANGENT_LISTED[n] if n < len(TANGENT_LISTED) else tangent(n)
    return (tanh.coefficient(N), tangent(n)), ((-1) ** n * F(tangent(n), factorial(N)), listed)


@register("eq-4.15", "Genocchi generating function, G_{2n+2} = (n+1)T_{2n+1}/2^{2n}, reference values",
          ("n",), SERIES, lambda b: grid(n=upto(max(0, b.order // 2))))
def _eq_4_15(n):
    N = 2 * n
    e, em = exp_series(N + 1, 1, "ordinary"), exp_series(N + 1, -1, "ordinary")
    ztanh = ((e - em) / (e + em)).shift(1)
    coeff = ztanh.coefficient(N)
    sign = 1 if n % 2 else -1
    formula = sign * F(2) ** (2 * n - 1) * F(genocchi(n), factorial(N))
    listed = GENOCCHI_LISTED[n] if n < len(GENOCCHI_LISTED) else genocchi(n)
    rel_l = genocchi(n + 1)
    rel_r = F((n + 1) * tangent(n), 4 ** n)
    return (coeff, genocchi(n), rel_l), (formula, listed, rel_r)


@register("eq-4.16", "closed form of V_m(z,0), and V_m(z,0) as a sigma series", ("N", "m"), SERIES,
          lambda b: grid(N=(b.order,), m=upto(b.max_m, 1)),
          notes=("numerator expanded to order N+2m-1, then divided by z^{2m-1}",))
def _eq_4_16(N, m):
    M = N + 2 * m - 1
    e = exp_series(M, 1, "ordinary")
    num = Series([0], M)
    for k in range(m):
        c = (-1) ** k * comb(m + k - 1, 2 * k) * 2 ** k * prod(range(1, 2 * k, 2))
        num = num + (e + Series([(-1) ** (m + k)], M)).shift(m - 1 - k).truncate(M).scale(c)
    closed = num.shift(-(2 * m - 1))
    V = _V(m, F(0), N)
    sig = Series([F(factorial(m), factorial(2 * m)) * sigma(n + m - 1, m) / factorial(n)
                  for n in range(N + 1)], N)
    return (V, V), (closed.truncate(N), sig)
