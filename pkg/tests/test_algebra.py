from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qcatalan.algebra import (
    Poly, Series, d_q, e_q_series, exp_series, genocchi_from_tangent, genocchi_numbers,
    q_tangent_numbers, tangent_numbers,
)
from qcatalan.scalar import ONE, QPoly, QRat, eval_at_q, q_int, qpow

F = Fraction
fracs = st.fractions(min_value=-9, max_value=9, max_denominator=7)
polys = st.lists(fracs, max_size=7).map(Poly)


@settings(max_examples=80, deadline=None)
@given(polys, polys, fracs)
def test_poly_ring_evaluation(a, b, x):
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)
    assert (a - a).is_zero()


def test_poly_basics():
    x = Poly.x(F(1))
    p = x**3 - x.scale(2)
    assert p.degree == 3 and p.is_monic()
    assert p.has_parity(1) and not p.has_parity(0)
    assert p.compose_scale(F(2)) == Poly([0, -4, 0, 8])
    assert p.shift(2).degree == 5


def test_d_q_on_monomials():
    x = Poly.x(ONE)
    for n in range(1, 7):
        assert d_q(x**n) == Poly.monomial(n - 1, QRat(q_int(n)))
    assert d_q(Poly([ONE])).is_zero()


def test_d_q_matches_difference_quotient():
    # (f(x) - f(qx)) / ((1 - q) x) for f = 3 + x^2 + 2 x^3
    f = Poly([3 * ONE, 0 * ONE, ONE, 2 * ONE])
    fq = f.compose_scale(qpow(1))
    diff = f - fq
    expected = Poly([c / (ONE - qpow(1)) for c in diff.coefficients[1:]])
    assert d_q(f) == expected


def test_series_exp_product_and_division():
    e, em = exp_series(10), exp_series(10, -1)
    assert (e * em) == Series([1], 10, e.tag)
    assert (Series([1], 10, e.tag) / e) == em
    assert e.normalized(7) == 1


def test_series_tags_must_match():
    with pytest.raises(ValueError):
        exp_series(4) + e_q_series(4)


def test_series_shift_and_truncate():
    s = Series([0, 0, 1, 2, 3], 4)
    assert s.shift(-2) == Series([1, 2, 3], 2)
    with pytest.raises(ArithmeticError):
        Series([1, 2], 1).shift(-1)
    assert s.truncate(2).order == 2


def test_tangent_and_genocchi_against_sympy_series():
    z = sympy.Symbol("z")
    tanh = sympy.series(sympy.tanh(z), z, 0, 16).removeO()
    expected_t = [abs(tanh.coeff(z, 2 * n + 1)) * sympy.factorial(2 * n + 1) for n in range(8)]
    assert [int(t) for t in tangent_numbers(8)] == [int(t) for t in expected_t]
    # G_{2n} via sympy's Genocchi numbers (absolute values)
    expected_g = [0] + [abs(int(sympy.genocchi(2 * n))) for n in range(1, 8)]
    assert [int(g) for g in genocchi_numbers(8)] == expected_g
    t = tangent_numbers(7)
    g = genocchi_numbers(8)
    for n in range(7):
        assert genocchi_from_tangent(n, t) == g[n + 1]


def test_listed_values():
    assert tangent_numbers(5) == [1, 2, 16, 272, 7936]
    assert genocchi_numbers(7) == [0, 1, 1, 3, 17, 155, 2073]


def test_q_tangent_numbers():
    tq = q_tangent_numbers(6)
    assert tq[0] == QPoly([1])
    assert tq[1] == QPoly([0, 1, 1])
    assert tq[2] == QPoly([0, 0, 1, 2, 3, 4, 3, 2, 1])
    t = tangent_numbers(6)
    for n in range(6):
        assert tq[n](1) == t[n]
        assert all(c >= 0 for c in tq[n].coefficients)


def test_e_q_reduces_to_exp_at_q_one():
    e = e_q_series(8)
    ex = exp_series(8)
    for n in range(9):
        assert eval_at_q(e.coefficients[n], 1) == ex.coefficients[n]
