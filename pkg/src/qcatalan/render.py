"""Canonical exact string forms for scalars and polynomials, and their parser.

Rationals render as ``"p/q"`` (or ``"p"``).  Polynomials in q render in
ascending powers, e.g. ``"1 - 2*q + 1/3*q^2"``.  A q-rational with a
non-trivial denominator renders as ``"(num) / (den)"`` with monic ``den``.
"""
import re
from fractions import Fraction

from .scalar import QPoly, QRat

_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*(?=[a-z]))?)?(?:([a-z])(?:\^(\d+))?)?$")


def render_qpoly(p, var="q"):
    if not p:
        return "0"
    parts = []
    for e, c in enumerate(p.coefficients):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def render_scalar(x):
    if isinstance(x, QRat):
        if x.is_polynomial():
            return render_qpoly(x.num)
        return f"({render_qpoly(x.num)}) / ({render_qpoly(x.den)})"
    if isinstance(x, QPoly):
        return render_qpoly(x)
    return str(Fraction(x))


def parse_qpoly(text, var="q"):
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text[0] not in "+-":
        text = "+ " + text
    chunks = re.findall(r"([+-])\s*([^+\-\s][^+\-]*)", text)
    if "".join(s + b for s, b in chunks).replace(" ", "") != text.replace(" ", ""):
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for sign, body in chunks:
        m = _TERM.match(body.strip())
        if not m or not (m.group(1) or m.group(2)):
            raise ValueError(f"cannot parse term {body!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        if m.group(2):
            if m.group(2) != var:
                raise ValueError(f"unexpected variable {m.group(2)!r}")
            e = int(m.group(3)) if m.group(3) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + (c if sign == "+" else -c)
    top = max(coeffs)
    return QPoly([coeffs.get(i, 0) for i in range(top + 1)])


def parse_scalar(text):
    """Inverse of :func:`render_scalar`: returns a Fraction or a QRat."""
    text = text.strip()
    m = re.fullmatch(r"\((.*)\) / \((.*)\)", text)
    if m:
        return QRat(parse_qpoly(m.group(1)), parse_qpoly(m.group(2)))
    if "q" in text:
        return QRat(parse_qpoly(text))
    return Fraction(text)


def render_poly_terms(poly):
    """``[{"pow": k, "coeff": str}, ...]`` for the nonzero x-coefficients."""
    return [{"pow": k, "coeff": render_scalar(c)}
            for k, c in enumerate(poly.coefficients) if c != 0]


def render_poly(poly, var="x"):
    """Descending-degree rendering of a Poly, coefficients in scalar form."""
    terms = []
    for k in range(len(poly.coefficients) - 1, -1, -1):
        c = poly.coefficients[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        text = render_scalar(c)
        if not mono:
            terms.append(f"({text})" if " " in text else text)
        elif text == "1":
            terms.append(mono)
        else:
            terms.append(f"({text})*{mono}")
    return " + ".join(terms) if terms else "0"


def render_value(v):
    """Best-effort canonical string for scalars, polynomials, series and lists."""
    from .algebra import Poly, Series
    if isinstance(v, Poly):
        return render_poly(v)
    if isinstance(v, Series):
        return "[" + ", ".join(render_scalar(c) for c in v.coefficients) + "]"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(render_value(x) for x in v) + "]"
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    return render_scalar(v)
