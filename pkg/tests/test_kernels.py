"""Both kernel backends against each other and against naive oracles."""
import pytest
from hypothesis import given, settings, strategies as st

from qcatalan import _kernels_py, kernels

BACKENDS = [kernels.backend_module(b) for b in kernels.available_backends()]

ints = st.integers(min_value=-10**30, max_value=10**30)
small = st.integers(min_value=-50, max_value=50)


def stripped(lst):
    lst = list(lst)
    while lst and not lst[-1]:
        lst.pop()
    return lst


polys = st.lists(ints, max_size=40).map(stripped)
small_polys = st.lists(small, max_size=8).map(stripped)


def naive_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return stripped(out)


def test_compiled_backend_present_or_python_fallback():
    assert "python" in kernels.available_backends()
    assert kernels.BACKEND in kernels.available_backends()


def test_use_backend_rebinds_and_rejects_unknown():
    original = kernels.BACKEND
    try:
        kernels.use_backend("python")
        assert kernels.poly_mul is _kernels_py.poly_mul
    finally:
        kernels.use_backend(original)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@pytest.mark.parametrize("mod", BACKENDS)
@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_mul_add_sub_match_naive(mod, a, b):
    assert mod.poly_mul(a, b) == naive_mul(a, b)
    s = mod.poly_add(a, b)
    assert mod.poly_sub(s, b) == stripped(a)


@pytest.mark.parametrize("mod", BACKENDS)
@settings(max_examples=100, deadline=None)
@given(polys, polys.filter(bool))
def test_exact_quotient_inverts_mul(mod, a, b):
    assert mod.poly_quo_exact(mod.poly_mul(a, b), b) == stripped(a)


@pytest.mark.parametrize("mod", BACKENDS)
@settings(max_examples=100, deadline=None)
@given(small_polys, small_polys, small_polys.filter(lambda p: len(p) > 1))
def test_gcd_contains_common_factor(mod, a, b, c):
    ac, bc = mod.poly_mul(a, c), mod.poly_mul(b, c)
    g = mod.poly_gcd(ac, bc)
    if ac or bc:
        assert g and g[-1] > 0
        for p in (ac, bc):
            if p:
                assert mod.poly_quo_exact(p, g) is not None
        # c divides the gcd up to content
        assert mod.poly_prem(g, c) == []


@pytest.mark.parametrize("mod", BACKENDS)
@settings(max_examples=100, deadline=None)
@given(polys, small, small.filter(bool))
def test_eval_homog(mod, a, p, r):
    d = len(a) - 1
    assert mod.poly_eval_homog(a, p, r) == sum(c * p**i * r**(d - i) for i, c in enumerate(a))


@settings(max_examples=200, deadline=None)
@given(polys, polys.filter(bool), small_polys, small_polys)
def test_backends_agree(a, b, c, d):
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    cy, py = BACKENDS
    for name, args in [("poly_mul", (a, b)), ("poly_add", (a, b)), ("poly_sub", (a, b)),
                       ("poly_prem", (a, b)), ("poly_content", (a,)), ("poly_gcd", (c, d)),
                       ("poly_scale", (a, 7)), ("poly_eval_homog", (a, 3, -2))]:
        assert getattr(cy, name)(*args) == getattr(py, name)(*args), name
    assert cy.poly_quo_exact(a, b) == py.poly_quo_exact(a, b)


@pytest.mark.parametrize("mod", BACKENDS)
def test_division_by_zero(mod):
    with pytest.raises(ZeroDivisionError):
        mod.poly_quo_exact([1, 2], [])
