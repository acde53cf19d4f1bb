from fractions import Fraction
from itertools import product
from math import comb

import pytest

from qcatalan.families import FamilySpec, moment_by_expansion, sigma
from qcatalan.lattice import (
    BRUTE_FORCE_MAX_STEPS, PathSizeError, alternating_sum, brute_force_c, brute_force_row,
    brute_force_weight, build_table, c_table, convolution_sum, lambda_q_weights, lambda_weights,
    mu_weights, recurrence_weights, sequence_weights, unit_weights,
)
from qcatalan.scalar import eval_at_q

F = Fraction


def naive_weight(n, k, r, start=0):
    """Walk every up/down word of length n; independent of the library enumerator."""
    total = F(0)
    for word in product((1, -1), repeat=n):
        h, w, ok = start, F(1), True
        for step in word:
            if step < 0:
                if h == 0:
                    ok = False
                    break
                w *= r(h - 1)
            h += step
        if ok and h == k:
            total += w
    return total


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_unit_weights_count_dyck_paths():
    t = build_table(unit_weights(), 12)
    assert t.b(4, 0) == 2
    for n in range(7):
        assert t.b(2 * n, 0) == catalan(n)
    assert t.b(3, 2) == 0 and t.b(5, 9) == 0


def test_spot_table_values():
    w = sequence_weights([F(2)], F(1))
    t = build_table(w, 6)
    assert t.b(4, 2) == 4
    assert c_table(w, t)[(4, 2)] == 8


def test_table_matches_naive_walks():
    w = sequence_weights([F(2), F(1, 3), F(-1)], F(5))
    t = build_table(w, 10)
    for n in range(11):
        for k in range(n + 1):
            assert t.b(n, k) == naive_weight(n, k, w)


@pytest.mark.parametrize("make", [lambda_weights, lambda_q_weights, mu_weights])
def test_brute_force_rows_match_table(make):
    for m in range(3):
        w = make(m)
        t = build_table(w, 10)
        for n in range(11):
            row = brute_force_row(n, w)
            for k in range(n + 1):
                assert row.get(k, w.zero) == t.b(n, k)


def test_c_table_against_brute_force():
    for m in range(3):
        w = lambda_weights(m)
        t = build_table(w, 8)
        c = c_table(w, t)
        for ell in range(5):
            for k in range(ell + 1):
                assert c[(2 * ell, 2 * k)] == brute_force_c(ell, k, w)


def test_moment_bridge():
    for m in range(6):
        t = build_table(recurrence_weights(FamilySpec("l_classical", m, -1)), 16)
        for n in range(9):
            assert t.b(2 * n, 0) == sigma(m, n)


def test_recurrence_weights_give_expansion_moments_q():
    spec = FamilySpec("v_q", 1, 2)
    t = build_table(recurrence_weights(spec), 8)
    for n in range(5):
        assert t.b(2 * n, 0) == moment_by_expansion(spec, 2 * n)


def test_convolution_and_alternating_sums():
    for m in range(4):
        w = lambda_weights(m)
        for n in range(4):
            for ell in range(4):
                lhs, rhs = convolution_sum(w, n, ell)
                assert lhs == rhs == sigma(m, n + ell)
            assert alternating_sum(w, n) == (1 if n == 0 else 0)


def test_mu_weights_degenerate_to_lambda_over_four():
    for m in range(3):
        mu, lam = mu_weights(m), lambda_weights(m)
        for j in range(6):
            assert eval_at_q(mu(j), 1) * 4 == lam(j)


def test_guards():
    with pytest.raises(PathSizeError):
        brute_force_weight(BRUTE_FORCE_MAX_STEPS + 2, 0, unit_weights())
    with pytest.raises(ValueError):
        build_table(unit_weights(), -1)
    with pytest.raises(IndexError):
        build_table(unit_weights(), 3).b(4, 0)
    with pytest.raises(ValueError):
        unit_weights()(-1)
    assert brute_force_weight(3, 0, unit_weights()) == 0
