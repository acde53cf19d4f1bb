"""Acceptance criteria, one test each, with wall-time budgets.

Each test records a ``PASS``/``FAIL`` line with its timing; the lines are
printed in the terminal summary (and directly when run as a script).
Caches are cleared first so the timings are cold.
"""
import functools
import sys
import time
from fractions import Fraction


from qcatalan import families, lattice
from qcatalan.algebra import genocchi_numbers, q_tangent_numbers, tangent_numbers
from qcatalan.families import (
    FamilySpec, MomentFunctional, apply_functional, family_poly, family_poly_by_recurrence,
    moment, moment_by_expansion, s_samples, sigma, special_values,
)
from qcatalan.identities import Bounds, check, check_all, registry_ids
from qcatalan.scalar import ONE, QRat, qpow

F = Fraction
q = qpow(1)

PARAM_FAMILIES = ("l_classical", "v_classical", "l_q", "h_q", "v_q", "H_q", "R_q", "r_q")
CLASSICAL_FAMILIES = ("lucas", "fibonacci", "cheb_t", "cheb_u")


def _cold():
    for mod in list(sys.modules.values()):
        if mod is None or not getattr(mod, "__name__", "").startswith("qcatalan"):
            continue
        for obj in list(vars(mod).values()):
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()


class Criterion:
    def __init__(self, log, number, title, budget):
        self.log, self.number, self.title, self.budget = log, number, title, budget
        self.failures = []

    def expect(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __enter__(self):
        _cold()
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if elapsed > self.budget:
            self.failures.append(f"runtime {elapsed:.2f}s exceeds {self.budget}s")
        status = "PASS" if not self.failures else "FAIL"
        line = f"[{status}] criterion {self.number}: {self.title} ({elapsed:.2f}s, budget {self.budget}s)"
        if self.failures:
            line += " :: " + "; ".join(self.failures[:3])
        self.log.append(line)
        print(line)
        if exc_type is None:
            assert not self.failures, self.failures
        return False


def test_criterion_1_moments(acceptance_log):
    with Criterion(acceptance_log, 1, "Lambda_m moments at s=-1 equal sigma(m,n), n<=8, m<=5", 1.0) as c:
        for m in range(6):
            functional = MomentFunctional("lambda_m", m, -1)
            for n in range(9):
                expected = sigma(m, n)
                c.expect(moment(functional, n) == expected, f"closed moment m={m} n={n}")
                c.expect(moment_by_expansion(functional, 2 * n) == expected, f"expansion m={m} n={n}")
        row = [moment(MomentFunctional("lambda_m", 2, -1), n) for n in range(8)]
        c.expect(row == [1, F(2, 3), 1, 2, F(14, 3), 12, 33, F(286, 3)], "m=2 row")


def test_criterion_2_paths(acceptance_log):
    with Criterion(acceptance_log, 2, "brute-force paths = table (n<=14); b(2n,0) = expansion moments", 30.0) as c:
        for make in (lattice.lambda_weights, lattice.lambda_q_weights, lattice.mu_weights):
            for m in range(4):
                w = make(m)
                table = lattice.build_table(w, 14)
                for n in range(15):
                    row = lattice.brute_force_row(n, w)
                    for k in range(n + 1):
                        c.expect(row.get(k, w.zero) == table.b(n, k), f"{w.name} b({n},{k})")
        specs = [FamilySpec(name, m, s) for m in range(4)
                 for name, s in (("l_classical", -1), ("l_classical", F(1, 3)), ("v_classical", 2),
                                 ("v_q", 1), ("v_q", -2))]
        for spec in specs:
            table = lattice.build_table(lattice.recurrence_weights(spec), 14)
            for n in range(8):
                c.expect(table.b(2 * n, 0) == moment_by_expansion(spec, 2 * n),
                         f"{spec.name} m={spec.m} s={spec.s} n={n}")


def test_criterion_3_dual_construction(acceptance_log):
    with Criterion(acceptance_log, 3, "closed form = recurrence, 8 families (+4 classical), n<=10, m<=4", 30.0) as c:
        points = s_samples(6)          # s-degree of a degree-10 member is at most 5
        for name in PARAM_FAMILIES:
            for m in range(5):
                for s in points:
                    spec = FamilySpec(name, m, s)
                    for n in range(11):
                        c.expect(family_poly(spec, n) == family_poly_by_recurrence(spec, n),
                                 f"{name} m={m} s={s} n={n}")
        for name in CLASSICAL_FAMILIES:
            spec = FamilySpec(name)
            for n in range(11):
                c.expect(family_poly(spec, n) == family_poly_by_recurrence(spec, n), f"{name} n={n}")
        report = check("eq-2.3", bounds=Bounds(max_n=10, max_m=4))
        c.expect(report.passed and len(report.points) > 0, "operator recurrence through d_q")


def test_criterion_4_registry(acceptance_log):
    with Criterion(acceptance_log, 4, "identity registry at n<=6, l<=6, m<=4, j<=3, order 16", 300.0) as c:
        ids = registry_ids()
        c.expect(len(ids) >= 30, f"registry has {len(ids)} ids")
        needed = [f"eq-1.{i}" for i in range(16, 29)] + ["eq-4.28"]
        c.expect(all(i in ids for i in needed), "eq-1.16 .. eq-1.28 and eq-4.28 present")
        reports = check_all(max_n=6, max_m=4, series_order=16, max_l=6, max_j=3, jobs=1)
        failed = [r.id for r in reports if not r.passed]
        c.expect(not failed, f"failed: {failed}")
        pairs = [r for r in reports if r.id.startswith("pair-")]
        c.expect(len(pairs) >= 6 and all(r.passed for r in pairs), "q at q0=1 agrees with classical")


def test_criterion_5_sequences(acceptance_log):
    with Criterion(acceptance_log, 5, "listed sequences reproduced; eq-1.7 discrepancy flagged", 60.0) as c:
        c.expect(tangent_numbers(5) == [1, 2, 16, 272, 7936], "tangent")
        c.expect(genocchi_numbers(7) == [0, 1, 1, 3, 17, 155, 2073], "Genocchi")
        tq = [QRat(p) for p in q_tangent_numbers(3)]
        third = q ** 2 * (1 + q) ** 2 * (1 + q ** 2) ** 2
        c.expect(tq == [ONE, q * (1 + q), third], "q-tangent")
        l0 = [special_values(FamilySpec("l_classical", 0, -1), n) for n in range(12)]
        l1 = [special_values(FamilySpec("l_classical", 1, -1), n) for n in range(12)]
        c.expect(l0 == [1, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1], "period-6 sequence, m=0")
        c.expect(l1 == [1, 1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0], "period-6 sequence, m=1")
        pent = [special_values(FamilySpec("l_q", 1, -1), n) for n in range(12)]
        c.expect(pent == [ONE, ONE, 0 * ONE, -q, -q ** 2, 0 * ONE, q ** 5, q ** 7, 0 * ONE,
                          -q ** 12, -q ** 15, 0 * ONE], "pentagonal powers through n=11")
        l2q = [special_values(FamilySpec("l_q", 2, -1), n) * families.qi(n + 1) for n in range(7)]
        c.expect(l2q == [ONE, 1 + q, q ** 2, -q * (1 + q), -q ** 2 * (1 + q) * (1 + q ** 2),
                         -q ** 6 * (1 + q), q ** 5 * (1 + q + q ** 2)], "l_n(1,2,-1,q)[n+1] through n=6")
        report = check("eq-1.7", bounds=Bounds(max_n=6))
        c.expect(report.passed, "eq-1.7 closed forms")
        c.expect(any("n=11" in f for f in report.flags), "eq-1.7 final entry flagged")


def test_criterion_6_functional_equations(acceptance_log):
    with Criterion(acceptance_log, 6, "V_m functional equations to order 16, m<=4, s in {0,1,-1}", 60.0) as c:
        bounds = Bounds(max_n=6, max_m=4, order=16)
        s_vals = [F(0), F(1), F(-1)]
        for ident in ("eq-4.11", "eq-4.23"):
            r = check(ident, ranges={"N": [16], "m": range(1, 5), "s": s_vals}, bounds=bounds)
            c.expect(r.passed and len(r.points) == 12, f"{ident} ({len(r.points)} points)")
        for ident in ("eq-4.16", "eq-4.27"):
            r = check(ident, ranges={"N": [16], "m": range(1, 5)}, bounds=bounds)
            c.expect(r.passed and len(r.points) == 4, ident)


def test_criterion_7_orthogonality(acceptance_log):
    with Criterion(acceptance_log, 7, "functionals annihilate l_i l_j and v_i v_j, i != j <= 6, m <= 3", 60.0) as c:
        cases = (("lambda_m", "l_classical"), ("v_m", "v_classical"), ("phi_q", "v_q"))
        for functional_name, fam in cases:
            for m in range(4):
                for s in s_samples(7):
                    functional = MomentFunctional(functional_name, m, s)
                    spec = FamilySpec(fam, m, s)
                    for i in range(7):
                        for j in range(7):
                            if i == j:
                                continue
                            value = apply_functional(functional, family_poly(spec, i) * family_poly(spec, j))
                            c.expect(value == 0, f"{functional_name} m={m} s={s} ({i},{j})")
        # l_n(x,m,s,q) is not an orthogonal family; its functional only kills l_n, n >= 1
        for m in range(4):
            functional = MomentFunctional("lambda_q", m, -1)
            for n in range(1, 7):
                c.expect(apply_functional(functional, family_poly(FamilySpec("l_q", m, -1), n)) == 0,
                         f"lambda_q m={m} n={n}")


if __name__ == "__main__":
    log = []
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    ok = True
    for t in tests:
        try:
            t(log)
        except AssertionError:
            ok = False
    sys.exit(0 if ok else 1)
