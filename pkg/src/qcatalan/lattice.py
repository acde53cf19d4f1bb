"""Weighted non-negative lattice paths.

Up-steps (i, j) -> (i+1, j+1) weigh 1; a down-step (i, j+1) -> (i+1, j)
weighs r(j).  The triangle b(n, k) collects the total weight of paths from
(0, 0) to (n, k) and obeys

    b(n, k) = b(n-1, k-1) + r(k) b(n-1, k+1).

A brute-force enumerator is kept next to the recurrence as an oracle.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .families import lambda_coeff, lambda_coeff_q, mu_coeff_q, recurrence_coefficient
from .scalar import ONE

BRUTE_FORCE_MAX_STEPS = 18


class PathSizeError(ValueError):
    """Raised when an enumeration would exceed the brute-force step cap."""


@dataclass(frozen=True)
class WeightFn:
    """Down-step weight j -> r(j) together with the scalar field's unit."""

    name: str
    fn: object
    one: object = Fraction(1)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, j):
        if j < 0:
            raise ValueError("weights are defined for heights j >= 0")
        try:
            return self._cache[j]
        except KeyError:
            value = self._cache[j] = self.fn(j)
            return value

    @property
    def zero(self):
        return self.one * 0


def unit_weights(one=Fraction(1)):
    return WeightFn("one", lambda j: one, one)


def sequence_weights(values, tail, name="sequence"):
    """r(j) = values[j] for j < len(values), then ``tail``."""
    values = list(values)
    one = Fraction(1) if not hasattr(tail, "num") else ONE
    return WeightFn(name, lambda j: values[j] if j < len(values) else tail, one)


def lambda_weights(m):
    return WeightFn(f"lambda({m})", lambda j: lambda_coeff(j, m))


def lambda_q_weights(m):
    return WeightFn(f"lambda_q({m})", lambda j: lambda_coeff_q(j, m), ONE)


def mu_weights(m):
    return WeightFn(f"mu_q({m})", lambda j: mu_coeff_q(j, m), ONE)


def recurrence_weights(spec):
    """Weights -c_j read off p_n = x p_{n-1} + c_{n-2} p_{n-2}.

    With these weights b(n, k) is the coefficient of p_k in x^n, so b(2n, 0)
    is the 2n-th moment.  For ``l_classical`` this is r(j) = -s lambda_j(m).
    """
    return WeightFn(f"recurrence({spec.name},{spec.m},{spec.s})",
                    lambda j: -recurrence_coefficient(spec, j), spec.one)


@dataclass(frozen=True)
class PathTable:
    n_max: int
    rows: tuple
    weights: WeightFn

    def b(self, n, k):
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside table of size {self.n_max}")
        if k < 0 or k > n:
            return self.weights.zero
        return self.rows[n][k]


def build_table(weights, n_max):
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    zero, one = weights.zero, weights.one
    rows = [(one,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            if (n - k) % 2:
                row.append(zero)
                continue
            left = prev[k - 1] if k >= 1 else zero
            right = prev[k + 1] if k + 1 < n else zero
            row.append(left + weights(k) * right if right else left)
        rows.append(tuple(row))
    return PathTable(n_max, tuple(rows), weights)


def _last_nonzero(sig):
    i = len(sig)
    while i and not sig[i - 1]:
        i -= 1
    return i


def _enumerate(steps, start, weights, want_end=None):
    """Counter {(end, signature): number of paths}.

    ``signature`` counts down-steps by the height they land on, so each
    distinct weight product is evaluated once.
    """
    if steps > BRUTE_FORCE_MAX_STEPS:
        raise PathSizeError(f"brute force limited to {BRUTE_FORCE_MAX_STEPS} steps, got {steps}")
    found = Counter()
    downs = [0] * (start + steps + 1)

    def walk(height, left):
        if want_end is not None and (height - left > want_end or height + left < want_end):
            return
        if left == 0:
            sig = tuple(downs)
            found[(height, sig[:_last_nonzero(sig)])] += 1
            return
        walk(height + 1, left - 1)
        if height > 0:
            downs[height - 1] += 1
            walk(height - 1, left - 1)
            downs[height - 1] -= 1

    walk(start, steps)
    return found


def _signature_weight(sig, weights, cache):
    """prod_j r(j)^sig[j], built by peeling one factor off a cached signature."""
    if sig in cache:
        return cache[sig]
    j = next((i for i, e in enumerate(sig) if e), None)
    if j is None:
        value = weights.one
    else:
        smaller = list(sig)
        smaller[j] -= 1
        value = _signature_weight(tuple(smaller), weights, cache) * weights(j)
    cache[sig] = value
    return value


def _weigh(found, weights):
    cache = {}
    totals = {}
    for (end, sig), count in found.items():
        w = _signature_weight(sig, weights, cache) * count
        totals[end] = totals[end] + w if end in totals else w
    return totals


def brute_force_weight(n, k, weights, start=0):
    """Total weight of the explicitly enumerated non-negative paths from
    height ``start`` to height ``k`` in ``n`` steps."""
    if k < 0 or start < 0:
        raise ValueError("heights must be non-negative")
    if (n + k + start) % 2:
        return weights.zero
    return _weigh(_enumerate(n, start, weights, want_end=k), weights).get(k, weights.zero)


def brute_force_row(n, weights):
    """{k: weight} for every endpoint reachable from (0, 0) in n steps."""
    return _weigh(_enumerate(n, 0, weights), weights)


def c_table(weights, table):
    """{(2l, 2k): c(2l, 2k)} with c(2l, 2k) = b(2l, 2k) * prod_{j<2k} r(j)."""
    out = {}
    for ell in range(table.n_max // 2 + 1):
        prod = weights.one
        for k in range(ell + 1):
            if k:
                prod = prod * weights(2 * k - 2) * weights(2 * k - 1)
            out[(2 * ell, 2 * k)] = table.b(2 * ell, 2 * k) * prod
    return out


def brute_force_c(ell, k, weights):
    """Weight of non-negative paths from height 2k down to 0 in 2*ell steps."""
    return brute_force_weight(2 * ell, 0, weights, start=2 * k)


def convolution_sum(weights, n, ell, table=None):
    """Both sides of sum_k b(2n,2k) b(2l,2k) prod_{j<2k} r(j) = b(2n+2l, 0)."""
    size = 2 * (n + ell)
    if table is None or table.n_max < size:
        table = build_table(weights, size)
    prod = weights.one
    lhs = weights.zero
    for k in range(min(n, ell) + 1):
        if k:
            prod = prod * weights(2 * k - 2) * weights(2 * k - 1)
        lhs = lhs + table.b(2 * n, 2 * k) * table.b(2 * ell, 2 * k) * prod
    return lhs, table.b(size, 0)


def alternating_sum(weights, n, table=None, sign=-1):
    """sum_k sign^k b(2n, 2k) prod_{j<k} r(2j); equals [n = 0] for sign -1."""
    if table is None or table.n_max < 2 * n:
        table = build_table(weights, 2 * n)
    prod = weights.one
    acc = weights.zero
    for k in range(n + 1):
        if k:
            prod = prod * weights(2 * k - 2)
        acc = acc + sign ** k * table.b(2 * n, 2 * k) * prod
    return acc
