"""Compare the compiled and pure-Python integer polynomial kernels.

Runs a few kernel-level micro benchmarks and one end-to-end workload (a batch
of q-moment and q-family computations) under each available backend.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from qcatalan import kernels


def _rand_poly(rng, deg, bits=40):
    return [rng.randrange(-(1 << bits), 1 << bits) for _ in range(deg + 1)]


def _workloads(rng):
    a, b = _rand_poly(rng, 60), _rand_poly(rng, 60)
    c = _rand_poly(rng, 25, 12)
    ab, ac = kernels.poly_mul(a, c), kernels.poly_mul(b, c)
    return {
        "poly_mul deg 60": lambda: kernels.poly_mul(a, b),
        "poly_quo_exact": lambda: kernels.poly_quo_exact(ab, c),
        "poly_gcd shared factor": lambda: kernels.poly_gcd(ab, ac),
        "poly_eval_homog": lambda: kernels.poly_eval_homog(a, 3, 7),
    }


def _end_to_end():
    from qcatalan import families

    families.qf.cache_clear()
    families.qb.cache_clear()
    families.qi.cache_clear()
    families.family_poly.cache_clear()
    families._moment_spec.cache_clear()
    for n in range(10):
        families.moment(families.FamilySpec("v_q", 2, 1), n)
        families.family_poly(families.FamilySpec("v_q", 3, 1), n)


def run(repeat):
    results = {}
    for backend in kernels.available_backends():
        kernels.use_backend(backend)
        rng = random.Random(1)
        timings = {}
        for name, fn in _workloads(rng).items():
            timings[name] = min(timeit.repeat(fn, number=50, repeat=repeat)) / 50
        timings["q-family batch"] = min(timeit.repeat(_end_to_end, number=1, repeat=repeat))
        results[backend] = timings
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    original = kernels.BACKEND
    try:
        results = run(args.repeat)
    finally:
        kernels.use_backend(original)
    names = list(next(iter(results.values())))
    backends = list(results)
    print(f"{'workload':28}" + "".join(f"{b:>14}" for b in backends)
          + ("       speedup" if len(backends) == 2 else ""))
    for name in names:
        line = f"{name:28}" + "".join(f"{results[b][name] * 1e3:11.3f} ms" for b in backends)
        if len(backends) == 2:
            line += f"{results['python'][name] / results['cython'][name]:13.2f}x"
        print(line)


if __name__ == "__main__":
    main()
