"""Command-line front end.

Verbs: ``family``, ``moments``, ``verify``, ``sequence`` and ``paths``.  Every
verb emits one document with the shape
``{"command", "params", "rows": [...], "flags": [...]}`` as JSON, CSV or a
LaTeX tabular.  Values are exact strings.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 internal
error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import families as fam
from . import lattice
from .algebra import genocchi_numbers, q_tangent_numbers, tangent_numbers
from .render import parse_scalar, render_scalar

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

FAMILY_ALIASES = {
    "l": "l_classical", "v": "v_classical", "lq": "l_q", "vq": "v_q", "hq": "h_q",
    "Hq": "H_q", "Rq": "R_q", "rq": "r_q",
}

SEQUENCES = ("tangent", "genocchi", "q-tangent", "l-at-1", "l-at-1-q", "sigma", "sigma-q")

WEIGHTS = ("lambda", "lambda-q", "mu", "one")

_TERM_SCHEMA = {
    "type": "object",
    "required": ["pow", "coeff"],
    "properties": {"pow": {"type": "integer"}, "coeff": {"type": "string"},
                   "s_pow": {"type": "integer"}},
}

OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["command", "params", "rows", "flags"],
    "properties": {
        "command": {"type": "string"},
        "params": {"type": "object"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index"],
                "properties": {
                    "index": {"type": ["integer", "string"]},
                    "value": {"type": "string"},
                    "poly": {"type": "array", "items": _TERM_SCHEMA},
                },
                "oneOf": [{"required": ["value"]}, {"required": ["poly"]}],
            },
        },
        "flags": {"type": "array", "items": {"type": "string"}},
    },
}


class UsageError(Exception):
    """Bad arguments that argparse itself cannot catch."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _scalar_arg(text):
    try:
        return parse_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact scalar: {text!r}") from exc


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _family_name(text):
    name = FAMILY_ALIASES.get(text, text)
    if name not in fam.FAMILIES:
        raise UsageError(f"unknown family {text!r}; choose from "
                         f"{sorted(set(FAMILY_ALIASES) | set(fam.FAMILIES))}")
    return name


# -- documents -------------------------------------------------------------------

def _doc(command, params, rows, flags=()):
    return {"command": command, "params": params, "rows": rows, "flags": list(flags)}


def _param(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return render_scalar(v)


def _poly_terms(poly, symbolic_s):
    n = poly.degree
    out = []
    for k, c in enumerate(poly.coefficients):
        if c == 0:
            continue
        term = {"pow": k, "coeff": render_scalar(c)}
        if symbolic_s:
            term["s_pow"] = (n - k) // 2
        out.append(term)
    return out


def family_document(name, m=0, s=None, n_max=4):
    name = _family_name(name)
    symbolic = s is None and name in fam._USES_S
    spec = fam.FamilySpec(name, m, 1 if symbolic else s)
    rows = [{"index": n, "poly": _poly_terms(fam.family_poly(spec, n), symbolic)}
            for n in range(n_max + 1)]
    params = {"family": name, "m": spec.m, "s": "symbolic" if symbolic else _param(spec.s),
              "q_mode": spec.q_mode, "max_n": n_max}
    return _doc("family", params, rows)


def moments_document(functional, m=0, s=None, n_max=4):
    if functional not in fam.FUNCTIONALS:
        raise UsageError(f"unknown functional {functional!r}; choose from {sorted(fam.FUNCTIONALS)}")
    if s is None:
        s = 1
    mf = fam.MomentFunctional(functional, m, s)
    spec = mf.family
    rows = [{"index": i, "value": render_scalar(fam.moment_of_power(spec, i))}
            for i in range(2 * n_max + 1)]
    params = {"functional": functional, "family": spec.name, "m": spec.m,
              "s": _param(spec.s), "max_n": n_max}
    return _doc("moments", params, rows)


def _reference_flags(name, m, s, values):
    """Compare against the stored reference lists; mismatches become flags.

    The m = 2 list is stored scaled by (n + 1)."""
    from .identities import classical
    if name != "l-at-1" or s != -1:
        return []
    listed = {0: classical.L_0_LISTED, 1: classical.L_1_LISTED, 2: classical.L_2_LISTED}.get(m)
    if listed is None:
        return []
    scale = (lambda n: n + 1) if m == 2 else (lambda n: 1)
    label = "(n+1) l_n(1,2,-1)" if m == 2 else f"l_n(1,{m},-1)"
    return [f"l-at-1: reference entry n={n} of {label} is {ref}, computed {render_scalar(v * scale(n))}"
            for n, (ref, v) in enumerate(zip(listed, values)) if Fraction(ref) != v * scale(n)]


def sequence_values(name, count, m=0, s=-1):
    if count < 0:
        raise UsageError("count must be non-negative")
    if name == "tangent":
        return tangent_numbers(count) if count else []
    if name == "genocchi":
        return genocchi_numbers(count) if count else []
    if name == "q-tangent":
        return q_tangent_numbers(count) if count else []
    if name == "l-at-1":
        return fam.l_at_one_sequence(m, count, Fraction(s))
    if name == "l-at-1-q":
        return fam.l_at_one_sequence(m, count, s, q_mode="q-exact")
    if name == "sigma":
        return [fam.sigma(m, n) for n in range(count)]
    if name == "sigma-q":
        return [fam.sigma_q(m, n) for n in range(count)]
    raise UsageError(f"unknown sequence {name!r}; choose from {list(SEQUENCES)}")


def sequence_document(name, count=8, m=0, s=None):
    s = -1 if s is None else s
    values = sequence_values(name, count, m, s)
    rows = [{"index": n, "value": render_scalar(v)} for n, v in enumerate(values)]
    uses = name in ("l-at-1", "l-at-1-q", "sigma", "sigma-q")
    params = {"sequence": name, "count": count}
    if uses:
        params["m"] = m
    if name.startswith("l-at-1"):
        params["s"] = _param(s)
    return _doc("sequence", params, rows, _reference_flags(name, m, s, values))


def _weights(kind, m):
    if kind == "lambda":
        return lattice.lambda_weights(m)
    if kind == "lambda-q":
        return lattice.lambda_q_weights(m)
    if kind == "mu":
        return lattice.mu_weights(m)
    if kind == "one":
        return lattice.unit_weights()
    raise UsageError(f"unknown weights {kind!r}; choose from {list(WEIGHTS)}")


def paths_document(weights="lambda", m=0, n_max=6, brute=False):
    w = _weights(weights, m)
    if brute and n_max > lattice.BRUTE_FORCE_MAX_STEPS:
        raise UsageError(f"brute-force cross-check is capped at {lattice.BRUTE_FORCE_MAX_STEPS} steps")
    table = lattice.build_table(w, n_max)
    rows, flags = [], []
    for n in range(n_max + 1):
        oracle = lattice.brute_force_row(n, w) if brute else None
        for k in range(n + 1):
            if (n - k) % 2:
                continue
            value = table.b(n, k)
            rows.append({"index": f"{n},{k}", "value": render_scalar(value)})
            if oracle is not None and oracle[k] != value:
                flags.append(f"mismatch at b({n},{k}): enumeration gives {render_scalar(oracle[k])}")
    params = {"weights": weights, "m": m if weights != "one" else 0, "max_n": n_max,
              "brute_force": brute}
    return _doc("paths", params, rows, flags)


def verify_document(ids=None, max_n=6, max_m=4, order=16, max_l=None, max_j=3, jobs=1):
    from .identities import check_all, registry_ids, summarize
    known = registry_ids()
    if ids:
        unknown = [i for i in ids if i not in known]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    reports = check_all(max_n=max_n, max_m=max_m, series_order=order, max_l=max_l,
                        max_j=max_j, ids=ids or None, jobs=jobs)
    rows, flags = [], []
    for r in reports:
        d = r.as_dict()
        d.pop("wall_time")
        row = {"index": r.id, "value": "pass" if r.passed else "fail"}
        row.update({k: d[k] for k in ("mode", "points", "failures", "domain")})
        if "smallest_failure" in d:
            row["smallest_failure"] = d["smallest_failure"]
        rows.append(row)
        flags.extend(r.flags)
    summary = summarize(reports)
    summary.pop("wall_time")
    params = {"ids": list(ids) if ids else "all", "max_n": max_n, "max_m": max_m, "order": order,
              "max_l": max_n if max_l is None else max_l, "max_j": max_j, "summary": summary}
    return _doc("verify", params, rows, flags), not summary["failed"]


# -- emitters --------------------------------------------------------------------

def _term_text(t):
    s = t.get("s_pow")
    parts = [t["coeff"] if " " not in t["coeff"] else f"({t['coeff']})"]
    if s:
        parts.append("s" if s == 1 else f"s^{s}")
    if t["pow"]:
        parts.append("x" if t["pow"] == 1 else f"x^{t['pow']}")
    return "*".join(parts)


def _poly_text(terms):
    return " + ".join(_term_text(t) for t in reversed(terms)) or "0"


def emit_json(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def emit_csv(doc):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    has_poly = any("poly" in r for r in doc["rows"])
    if has_poly:
        w.writerow(["index", "pow", "s_pow", "coeff"])
        for r in doc["rows"]:
            for t in r["poly"]:
                w.writerow([r["index"], t["pow"], t.get("s_pow", ""), t["coeff"]])
    else:
        w.writerow(["index", "value"])
        for r in doc["rows"]:
            w.writerow([r["index"], r["value"]])
    for f in doc["flags"]:
        w.writerow(["# flag", f])
    return buf.getvalue()


def _latex_escape(text):
    return text.replace("_", r"\_").replace("#", r"\#")


def _latex_math(text):
    return text.replace("*", " ")


def emit_latex(doc):
    lines = [r"\begin{tabular}{rl}", r"\hline", r"index & value \\", r"\hline"]
    for r in doc["rows"]:
        body = _poly_text(r["poly"]) if "poly" in r else r["value"]
        idx = _latex_escape(str(r["index"]))
        if "poly" in r or any(ch in body for ch in "/^*q"):
            body = f"${_latex_math(body)}$"
        lines.append(f"{idx} & {body} \\\\")
    lines += [r"\hline", r"\end{tabular}"]
    for f in doc["flags"]:
        lines.append("% flag: " + f)
    return "\n".join(lines) + "\n"


EMITTERS = {"json": emit_json, "csv": emit_csv, "latex": emit_latex}


# -- argument parsing ------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(EMITTERS), default="json")
    common.add_argument("--out", metavar="PATH", help="write the document here instead of stdout")
    common.add_argument("--max-n", "--n", dest="max_n", type=_nonneg, default=None)
    common.add_argument("--max-m", dest="max_m", type=_nonneg, default=4)
    common.add_argument("--order", type=_nonneg, default=16, help="series order")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    p = _Parser(prog="qcatalan", description="Exact super Catalan polynomial toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("family", parents=[common], help="table of family polynomials")
    f.add_argument("name")
    f.add_argument("--m", type=_nonneg, default=0)
    f.add_argument("--s", type=_scalar_arg, default=None,
                   help="value of s; omitted means s stays symbolic (s_pow per term)")

    mo = sub.add_parser("moments", parents=[common], help="moments F(x^i) for i = 0..2n")
    mo.add_argument("functional")
    mo.add_argument("--m", type=_nonneg, default=0)
    mo.add_argument("--s", type=_scalar_arg, default=None, help="value of s (default 1)")

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("ids", nargs="*", help="identity ids; empty means the whole registry")
    v.add_argument("--suite", choices=["all"], default=None)
    v.add_argument("--max-l", dest="max_l", type=_nonneg, default=None)
    v.add_argument("--max-j", dest="max_j", type=_nonneg, default=3)

    sq = sub.add_parser("sequence", parents=[common], help="named exact sequences")
    sq.add_argument("name", help=", ".join(SEQUENCES))
    sq.add_argument("--count", type=_nonneg, default=8)
    sq.add_argument("--m", type=_nonneg, default=0)
    sq.add_argument("--s", type=_scalar_arg, default=None, help="value of s (default -1)")

    pa = sub.add_parser("paths", parents=[common], help="weighted lattice path triangle b(n,k)")
    pa.add_argument("--weights", choices=WEIGHTS, default="lambda")
    pa.add_argument("--m", type=_nonneg, default=0)
    pa.add_argument("--brute-force", dest="brute", action="store_true",
                    help="cross-check every row by explicit enumeration")
    return p


def run(args):
    """Returns (document, ok)."""
    n = args.max_n
    if args.command == "family":
        return family_document(args.name, args.m, args.s, 4 if n is None else n), True
    if args.command == "moments":
        return moments_document(args.functional, args.m, args.s, 4 if n is None else n), True
    if args.command == "sequence":
        return sequence_document(args.name, args.count, args.m, args.s), True
    if args.command == "paths":
        doc = paths_document(args.weights, args.m, 6 if n is None else n, args.brute)
        return doc, not doc["flags"]
    if args.command == "verify":
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        return verify_document(args.ids or None, 6 if n is None else n, args.max_m, args.order,
                               args.max_l, args.max_j, args.jobs)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None):
    from .identities import RangeCapError
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, ok = run(args)
    except (UsageError, RangeCapError, ValueError) as exc:
        print(f"qcatalan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"qcatalan: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = EMITTERS[args.format](doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
