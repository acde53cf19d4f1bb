from fractions import Fraction
from math import comb

import pytest

from qcatalan.algebra import Poly
from qcatalan.families import (
    FAMILIES, FUNCTIONALS, Q_FAMILIES, FamilySpec, MomentFunctional, a_coeff,
    a_coeff_binomial_form, apply_functional, expand_in_basis, family_poly,
    family_poly_by_recurrence, genfun_convolution_check, lambda_coeff, lambda_coeff_q,
    moment, moment_by_expansion, moment_of_power, monomial_expansion, qi, sigma, sigma_q,
    special_values, v_q_alternate,
)
from qcatalan.scalar import ONE, eval_at_q, qpow

F = Fraction
X = Poly.x(F(1))
XQ = Poly.x(ONE)
S_SAMPLES = (F(1), F(-1), F(2), F(-1, 4))


def spec_for(name, m=0, s=F(-1)):
    return FamilySpec(name, m, s)


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_unknown_family_and_missing_s():
    with pytest.raises(ValueError):
        FamilySpec("legendre")
    with pytest.raises(ValueError):
        FamilySpec("l_classical", 1)
    with pytest.raises(ValueError):
        FamilySpec("l_classical", -1, 1)


def test_listed_low_degree_members():
    for m in range(5):
        for s in S_SAMPLES:
            p2 = family_poly(FamilySpec("l_classical", m, s), 2)
            assert p2 == X**2 + Poly([2 * s / (m + 1)])
            p4 = family_poly(FamilySpec("l_classical", m, s), 4)
            assert p4 == X**4 + (X**2).scale(12 * s / (m + 3)) + Poly([12 * s * s / ((m + 2) * (m + 3))])
        v2 = family_poly(FamilySpec("v_q", m, 1), 2)
        assert v2 == XQ**2 - Poly([qpow(1) / qi(2 * m + 2)])
        l2 = family_poly(FamilySpec("l_q", m, -qpow(m)), 2)
        assert l2 == XQ**2 - Poly([qpow(m) * qi(2) / qi(m + 1)])


def test_lucas_and_classical_values():
    assert family_poly(FamilySpec("lucas"), 2) == X**2 - Poly([2])
    assert family_poly(FamilySpec("fibonacci"), 3) == X**3 - X.scale(2)


@pytest.mark.parametrize("name", FAMILIES)
def test_monic_with_parity(name):
    spec = FamilySpec(name, 2, F(3) if name not in Q_FAMILIES else 3 * ONE)
    for n in range(13):
        p = family_poly(spec, n)
        assert p.degree == n and p.is_monic() and p.has_parity(n % 2)


@pytest.mark.parametrize("name", FAMILIES)
def test_dual_construction_small(name):
    for m in range(3):
        for s in (F(1), F(-1, 2)):
            spec = FamilySpec(name, m, s)
            for n in range(8):
                assert family_poly(spec, n) == family_poly_by_recurrence(spec, n)


def test_specialization_web():
    for n in range(1, 11):
        assert family_poly(spec_for("l_classical", 0), n) == family_poly(FamilySpec("lucas"), n)
        assert family_poly(spec_for("l_classical", 1), n) == family_poly(FamilySpec("fibonacci"), n)
        assert family_poly(spec_for("l_classical", 0, F(-1, 4)), n) == family_poly(FamilySpec("cheb_t"), n)
        assert family_poly(spec_for("l_classical", 1, F(-1, 4)), n) == family_poly(FamilySpec("cheb_u"), n)
    for n in range(2, 11):
        f = FamilySpec("fibonacci")
        assert family_poly(FamilySpec("lucas"), n) == family_poly(f, n) - family_poly(f, n - 2)
    for m in range(4):
        for s in S_SAMPLES:
            for n in range(9):
                assert family_poly(FamilySpec("v_classical", m, s), n) == \
                    family_poly(FamilySpec("l_classical", m, -s / 4), n)


def test_q_lucas_relation():
    for n in range(2, 10):
        lhs = family_poly(FamilySpec("l_q", 0, -1), n)
        rhs = family_poly(FamilySpec("l_q", 1, -1), n) - family_poly(FamilySpec("l_q", 1, -1), n - 2).scale(qpow(n - 1))
        assert lhs == rhs


def test_q_to_one_degeneration():
    for m in range(4):
        for s in (F(1), F(-2)):
            for n in range(9):
                for qname, cname in (("l_q", "l_classical"), ("v_q", "v_classical")):
                    qp = family_poly(FamilySpec(qname, m, s), n)
                    cp = family_poly(FamilySpec(cname, m, s), n)
                    assert qp.map_coefficients(lambda c: eval_at_q(c, 1)) == cp


def test_r_product_form():
    for n in range(7):
        prod = Poly([ONE])
        for j in range(n):
            prod = prod * (XQ**2 - Poly([qpow(j)]))
        assert family_poly(FamilySpec("r_q"), 2 * n) == prod


def test_v_q_alternate_form():
    for m in range(4):
        for n in range(9):
            assert v_q_alternate(m, 2, n) == family_poly(FamilySpec("v_q", m, 2), n)


def test_sigma_values():
    assert [sigma(2, n) for n in range(8)] == [1, F(2, 3), 1, 2, F(14, 3), 12, 33, F(286, 3)]
    assert all(sigma(1, n) == catalan(n) for n in range(10))
    assert all(sigma(0, n) == comb(2 * n, n) for n in range(10))
    for m in range(7):
        for n in range(7):
            assert eval_at_q(sigma_q(m, n), 1) == sigma(m, n)


def test_lambda_coefficients():
    for m in range(6):
        assert lambda_coeff(0, m) == F(2, m + 1)
        assert lambda_coeff(1, m) == F(2 * (2 * m + 1), (m + 1) * (m + 2))
        for n in range(7):
            assert eval_at_q(lambda_coeff_q(n, m), 1) == lambda_coeff(n, m)


def test_a_coefficients_and_reconstruction():
    for n in range(9):
        for k in range(n // 2 + 1):
            assert a_coeff(n, k, 0) == comb(n, k)
            assert a_coeff(n, k, 1) == comb(n, k) - (comb(n, k - 1) if k else 0)
            for m in range(4):
                assert a_coeff(n, k, m) == a_coeff_binomial_form(n, k, m)
    for m in range(4):
        for s in (F(-1), F(1), F(-1, 4)):
            spec = FamilySpec("l_classical", m, s)
            for n in range(9):
                acc = Poly()
                for idx, c in monomial_expansion(n, m, s):
                    acc = acc + family_poly(spec, idx).scale(c)
                assert acc == Poly.monomial(n, F(1))


def test_expand_in_basis_round_trip():
    spec = FamilySpec("v_q", 2, 3)
    p = XQ**5 - XQ.scale(qpow(2))
    coeffs = expand_in_basis(spec, p)
    acc = Poly()
    for j, c in coeffs.items():
        acc = acc + family_poly(spec, j).scale(c)
    assert acc == p


def _functional_specs():
    for name in FUNCTIONALS:
        for m in (0, 2):
            yield MomentFunctional(name, m, F(-1) if FUNCTIONALS[name] not in Q_FAMILIES else 2 * ONE)


@pytest.mark.parametrize("functional", list(_functional_specs()), ids=lambda f: f"{f.name}-{f.m}")
def test_closed_moments_match_expansion(functional):
    for i in range(0, 13):
        assert moment_of_power(functional, i) == moment_by_expansion(functional, i)


def test_named_moments():
    assert moment(MomentFunctional("lambda"), 2) == 6
    assert moment(MomentFunctional("lambda_m", 2, -1), 2) == 1
    for m in range(4):
        phi = moment(MomentFunctional("phi_q", m, 1), 1)
        assert phi == qpow(1) / (qi(m + 1) * (ONE + qpow(m + 1)))


@pytest.mark.parametrize("name,fam", [("lambda_m", "l_classical"), ("phi_q", "v_q"), ("v_m", "v_classical")])
def test_orthogonality(name, fam):
    for m in range(4):
        functional = MomentFunctional(name, m, F(-1))
        spec = FamilySpec(fam, m, F(-1))
        for i in range(7):
            assert apply_functional(functional, family_poly(spec, i)) == (1 if i == 0 else 0)
            for j in range(i):
                assert apply_functional(functional, family_poly(spec, i) * family_poly(spec, j)) == 0


def test_special_values():
    assert special_values(FamilySpec("l_q", 1, -1), 9) == -qpow(12)
    assert [special_values(FamilySpec("l_classical", 1, -1), n) for n in range(12)] == \
        [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0]
    for m in range(4):
        v2 = special_values(FamilySpec("v_q", m, 1 / qpow(1)), 2)
        assert v2 == qpow(1) * qi(2 * m + 1) / qi(2 * m + 2)


@pytest.mark.parametrize("m,x,s", [(1, 1, -1), (2, 2, 1), (3, F(-1, 2), F(1, 3))])
def test_generating_function(m, x, s):
    out = genfun_convolution_check(m, s, x, order=10)
    assert out["ok"]
    assert out["lhs"][0] == out["rhs"][0] == 1
    with pytest.raises(ValueError):
        genfun_convolution_check(0, s, x)
