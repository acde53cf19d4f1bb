"""Registry machinery: checks, bounds, reports, and the sweep driver."""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from ..render import render_value

SYMBOLIC_Q = "symbolic-in-q"
SAMPLE_S = "rational-sample-in-s"
SERIES = "series-to-order-N"
EXACT = "exact-rational"
PAIRING = "q-to-1-pairing"

CAPS = {"max_n": 24, "max_l": 24, "max_m": 12, "max_j": 12, "order": 48}


class UnknownIdentityError(KeyError):
    pass


class RangeCapError(ValueError):
    pass


@dataclass(frozen=True)
class Bounds:
    max_n: int = 6
    max_l: int = 6
    max_m: int = 4
    max_j: int = 3
    order: int = 16

    def __post_init__(self):
        for name, cap in CAPS.items():
            value = getattr(self, name)
            if value < 0:
                raise RangeCapError(f"{name} must be non-negative, got {value}")
            if value > cap:
                raise RangeCapError(f"{name}={value} exceeds the safety cap {cap}")


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    title: str
    params: tuple
    mode: str
    domain: object          # Bounds -> iterable of parameter tuples
    evaluate: object        # *params -> (lhs, rhs) or (lhs, rhs, flag)
    notes: tuple = ()
    static_flags: tuple = ()

    def points(self, bounds):
        return sorted(set(self.domain(bounds)))


@dataclass
class PointResult:
    params: tuple
    ok: bool
    lhs: str
    rhs: str
    flag: str = None
    error: str = None

    def as_dict(self, names):
        out = {"params": dict(zip(names, _jsonable(self.params))), "ok": self.ok,
               "lhs": self.lhs, "rhs": self.rhs}
        if self.flag:
            out["flag"] = self.flag
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class VerificationReport:
    id: str
    title: str
    mode: str
    params: tuple
    domain: dict
    points: list = field(default_factory=list)
    flags: list = field(default_factory=list)
    notes: tuple = ()
    wall_time: float = 0.0

    @property
    def failures(self):
        return [p for p in self.points if not p.ok]

    @property
    def passed(self):
        return not self.failures

    @property
    def smallest_failure(self):
        fails = self.failures
        return fails[0] if fails else None

    def values(self):
        """{params: (lhs, rhs)} as rendered strings, for pairing and reproducibility."""
        return {p.params: (p.lhs, p.rhs) for p in self.points}

    def as_dict(self, include_points=False):
        out = {
            "id": self.id,
            "title": self.title,
            "mode": self.mode,
            "domain": self.domain,
            "points": len(self.points),
            "passed": self.passed,
            "failures": len(self.failures),
            "flags": list(self.flags),
            "notes": list(self.notes),
            "wall_time": round(self.wall_time, 6),
        }
        if self.smallest_failure is not None:
            out["smallest_failure"] = self.smallest_failure.as_dict(self.params)
        if include_points:
            out["results"] = [p.as_dict(self.params) for p in self.points]
        return out


def _jsonable(values):
    return [v if isinstance(v, (int, str)) else str(v) for v in values]


REGISTRY = {}


def register(id, title, params, mode, domain, notes=(), flags=()):
    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate identity id {id!r}")
        REGISTRY[id] = IdentityCheck(id, title, tuple(params), mode, domain, fn,
                                     tuple(notes), tuple(flags))
        return fn
    return deco


def registry_ids():
    _load()
    return sorted(REGISTRY, key=_id_key)


def _id_key(ident):
    head, _, rest = ident.partition("-")
    nums = []
    for part in rest.replace("-", ".").split("."):
        nums.append((0, int(part), "") if part.isdigit() else (1, 0, part))
    return (head != "eq", nums)


def get_check(ident):
    _load()
    try:
        return REGISTRY[ident]
    except KeyError:
        raise UnknownIdentityError(ident) from None


def _load():
    if not REGISTRY:
        from . import classical, pairs, qfamilies, series  # noqa: F401  (registration side effects)


# -- domains -----------------------------------------------------------------

def grid(**axes):
    """Cartesian product of named ranges; each value may be a callable of the
    parameters that come before it (dict order)."""
    names = list(axes)

    def rec(i, acc):
        if i == len(names):
            yield tuple(acc)
            return
        spec = axes[names[i]]
        values = spec(*acc) if callable(spec) else spec
        for v in values:
            yield from rec(i + 1, acc + [v])

    return rec(0, [])


def upto(n, start=0):
    return range(start, n + 1)


# -- running -------------------------------------------------------------------

def _evaluate_point(check, point):
    try:
        out = check.evaluate(*point)
    except ArithmeticError as exc:
        return PointResult(point, False, "", "", error=f"{type(exc).__name__}: {exc}")
    lhs, rhs = out[0], out[1]
    flag = out[2] if len(out) > 2 else None
    return PointResult(point, bool(lhs == rhs), render_value(lhs), render_value(rhs), flag)


def _run_chunk(ident, points):
    check = get_check(ident)
    return [_evaluate_point(check, p) for p in points]


def _filter_points(points, names, ranges):
    if not ranges:
        return points
    unknown = set(ranges) - set(names)
    if unknown:
        raise ValueError(f"unknown parameter(s) {sorted(unknown)}; expected {list(names)}")
    allowed = {k: set(v) for k, v in ranges.items()}
    idx = {name: i for i, name in enumerate(names)}
    return [p for p in points if all(p[idx[k]] in vals for k, vals in allowed.items())]


_RANGE_TO_BOUND = {"n": "max_n", "l": "max_l", "m": "max_m", "j": "max_j", "k": "max_n"}


def _domain_summary(check, points):
    out = {}
    for i, name in enumerate(check.params):
        vals = sorted({p[i] for p in points}, key=lambda v: (str(type(v)), v))
        if not vals:
            out[name] = []
        elif all(isinstance(v, int) for v in vals) and vals == list(range(vals[0], vals[-1] + 1)):
            out[name] = f"{vals[0]}..{vals[-1]}"
        else:
            out[name] = [str(v) for v in vals]
    return out


def check(ident, ranges=None, bounds=None, jobs=1):
    """Run one identity over its domain; returns a VerificationReport."""
    chk = get_check(ident)
    bounds = bounds or Bounds()
    if ranges:
        widened = {}
        for name, values in ranges.items():
            values = list(values)
            key = _RANGE_TO_BOUND.get(name)
            if key and values and max(values) > getattr(bounds, key):
                widened[key] = max(values)
        if widened:
            bounds = replace(bounds, **widened)
    points = _filter_points(chk.points(bounds), chk.params, ranges)
    start = time.perf_counter()
    if jobs and jobs > 1 and len(points) > 1:
        chunks = [points[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, [ident] * len(chunks), chunks))
        results = sorted(itertools.chain.from_iterable(parts), key=lambda r: points.index(r.params))
    else:
        results = [_evaluate_point(chk, p) for p in points]
    elapsed = time.perf_counter() - start
    flags = list(chk.static_flags)
    for r in results:
        if r.flag and r.flag not in flags:
            flags.append(r.flag)
    return VerificationReport(chk.id, chk.title, chk.mode, chk.params,
                              _domain_summary(chk, points), results, flags, chk.notes, elapsed)


def check_all(max_n=6, max_m=4, series_order=16, max_l=None, max_j=3, ids=None, jobs=1):
    bounds = Bounds(max_n=max_n, max_l=max_n if max_l is None else max_l, max_m=max_m,
                    max_j=max_j, order=series_order)
    chosen = registry_ids() if ids is None else list(ids)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_with_bounds, chosen, [bounds] * len(chosen)))
    return [check(i, bounds=bounds) for i in chosen]


def _check_with_bounds(ident, bounds):
    return check(ident, bounds=bounds)


def summarize(reports):
    failed = [r.id for r in reports if not r.passed]
    flagged = [r.id for r in reports if r.flags]
    return {
        "identities": len(reports),
        "points": sum(len(r.points) for r in reports),
        "passed": len(reports) - len(failed),
        "failed": failed,
        "flagged": flagged,
        "wall_time": round(sum(r.wall_time for r in reports), 6),
    }
