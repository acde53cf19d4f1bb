import dataclasses

import pytest

from qcatalan.identities import (
    Bounds, RangeCapError, UnknownIdentityError, check, check_all, get_check, registry_ids,
    summarize,
)
from qcatalan.identities import core

REQUIRED = [
    "eq-1.16", "eq-1.17", "eq-1.18", "eq-1.19", "eq-1.20", "eq-1.21", "eq-1.22", "eq-1.23",
    "eq-1.24", "eq-1.25", "eq-1.26", "eq-1.27", "eq-1.28", "eq-2.3", "eq-2.5", "eq-2.6",
    "eq-2.7", "eq-2.8", "eq-2.10", "eq-2.11", "eq-2.12", "eq-2.13", "eq-2.14", "eq-3.2",
    "eq-3.3", "eq-3.4", "eq-3.6", "eq-3.7", "eq-3.8", "eq-3.9", "eq-3.10", "eq-3.11",
    "eq-3.12", "eq-3.13", "eq-4.3", "eq-4.5", "eq-4.7", "eq-4.11", "eq-4.12", "eq-4.13",
    "eq-4.14", "eq-4.16", "eq-4.18", "eq-4.19", "eq-4.23", "eq-4.24", "eq-4.25", "eq-4.27",
    "eq-4.28", "eq-4.3-example", "eq-4.14-example",
]

SMALL = Bounds(max_n=3, max_l=3, max_m=2, max_j=2, order=8)


def test_registry_contents():
    ids = registry_ids()
    assert len(ids) >= 30
    assert len(set(ids)) == len(ids)
    missing = [i for i in REQUIRED if i not in ids]
    assert not missing


def test_modes_are_declared():
    modes = {core.SYMBOLIC_Q, core.SAMPLE_S, core.SERIES, core.EXACT, core.PAIRING}
    for i in registry_ids():
        assert get_check(i).mode in modes


def test_unknown_id_and_caps():
    with pytest.raises(UnknownIdentityError):
        check("eq-bogus")
    with pytest.raises(RangeCapError):
        Bounds(max_n=1000)
    with pytest.raises(RangeCapError):
        check("eq-1.27", ranges={"n": range(100)})
    with pytest.raises(ValueError):
        check("eq-1.27", ranges={"z": [1]})


def test_eq_1_27_spot_and_sweep():
    r = check("eq-1.27", ranges={"n": range(7), "m": range(1, 6)})
    assert r.passed and len(r.points) == 35
    point = [p for p in r.points if p.params == (1, 1)][0]
    assert point.lhs == point.rhs == "1"


def test_listed_examples():
    assert check("eq-2.12", ranges={"n": range(5)}).passed
    assert check("eq-4.3-example").passed
    assert check("eq-4.14-example").passed
    r = check("eq-4.25", ranges={"n": [4], "j": [2], "m": [1, 2, 3]})
    assert r.passed and len(r.points) == 3
    assert check("eq-1.19", bounds=Bounds(max_n=8, max_l=8)).passed


def test_max_n_zero_is_trivial():
    reports = check_all(max_n=0, max_m=1, series_order=2, max_j=0)
    assert all(r.passed for r in reports), [r.id for r in reports if not r.passed]


def test_single_filter_and_reproducibility():
    a = check_all(max_n=3, max_m=2, series_order=6, ids=["eq-3.11"])
    b = check_all(max_n=3, max_m=2, series_order=6, ids=["eq-3.11"])
    assert len(a) == 1
    assert a[0].values() == b[0].values()
    assert a[0].as_dict(include_points=True)["results"] == b[0].as_dict(include_points=True)["results"]


def test_parallel_sweep_matches_serial():
    serial = check("eq-3.6", bounds=SMALL)
    par = check("eq-3.6", bounds=SMALL, jobs=2)
    assert serial.values() == par.values()
    assert [p.params for p in serial.points] == [p.params for p in par.points]


def test_mutated_identity_fails_with_smallest_witness(monkeypatch):
    orig = get_check("eq-1.19")

    def broken(n, ell):
        lhs, rhs = orig.evaluate(n, ell)
        return lhs, rhs + (1 if n + ell >= 3 else 0)

    monkeypatch.setitem(core.REGISTRY, "eq-1.19", dataclasses.replace(orig, evaluate=broken))
    r = check("eq-1.19", bounds=SMALL)
    assert not r.passed
    first = r.smallest_failure
    assert sum(first.params) == 3 and first.params == min(p.params for p in r.failures)
    assert first.lhs != first.rhs
    d = r.as_dict()
    assert d["smallest_failure"]["params"] == {"n": first.params[0], "l": first.params[1]}


def test_arithmetic_error_is_reported_not_raised(monkeypatch):
    orig = get_check("eq-1.19")

    def boom(n, ell):
        if n == 1:
            raise ZeroDivisionError("synthetic")
        return orig.evaluate(n, ell)

    monkeypatch.setitem(core.REGISTRY, "eq-1.19", dataclasses.replace(orig, evaluate=boom))
    r = check("eq-1.19", bounds=SMALL)
    assert not r.passed and "synthetic" in r.smallest_failure.error
    assert len(r.points) == (SMALL.max_n + 1) * (SMALL.max_l + 1)


def test_flags_surface_known_typos():
    flagged = {r.id: r.flags for r in check_all(max_n=6, max_m=2, series_order=8,
                                                 ids=["eq-1.7", "eq-4.10", "eq-4.5"])}
    assert all(flagged[i] for i in flagged)
    assert any("n=11" in f for f in flagged["eq-1.7"])


def test_equivalent_forms_pass_together():
    ids = ["eq-4.11", "eq-4.12", "eq-4.13"]
    reports = check_all(max_n=5, max_m=3, series_order=10, ids=ids)
    assert len({r.passed for r in reports}) == 1


def test_pairs_agree_at_q_one():
    ids = [i for i in registry_ids() if i.startswith("pair-")]
    assert len(ids) >= 6
    reports = check_all(max_n=4, max_m=3, series_order=8, ids=ids)
    assert all(r.passed for r in reports), [r.id for r in reports if not r.passed]


def test_summary_shape():
    reports = check_all(max_n=2, max_m=1, series_order=4, ids=["eq-1.18", "eq-3.6"])
    s = summarize(reports)
    assert s["identities"] == 2 and s["failed"] == []
    assert s["points"] == sum(len(r.points) for r in reports)


def test_report_domain_is_explicit():
    r = check("eq-1.27", bounds=SMALL)
    d = r.as_dict()
    assert d["domain"] == {"m": "1..2", "n": "0..3"}
    assert d["mode"] == core.EXACT and d["points"] == len(r.points)
