"""Human-readable polynomial strings and a small parser for them.

One variable is written in ascending powers (``1 - 3t + 5t^2``); two
variables in descending lexicographic order with space-separated factors
(``x^2 y^2 - x^2 y - x y^2 + 3 x y - x - y + 1``), which is how the
polynomials are usually displayed in print.
"""

from __future__ import annotations

import re

from .laurent import LaurentPoly, poly_class

_TERM = re.compile(r"([+-])?(\d+)?((?:[txy](?:\^-?\d+)?)*)")
_FACTOR = re.compile(r"([txy])(?:\^(-?\d+))?")


def _monomial(variables, exps) -> list[str]:
    parts = []
    for name, k in zip(variables, exps):
        if k == 1:
            parts.append(name)
        elif k != 0:
            parts.append(f"{name}^{k}")
    return parts


def format_poly(poly: LaurentPoly) -> str:
    if poly.is_zero():
        return "0"
    joiner = "" if poly.nvars == 1 else " "
    items = poly.terms()
    if poly.nvars > 1:
        items = items[::-1]
    out = []
    for idx, (exps, coeff) in enumerate(items):
        parts = _monomial(poly.variables, exps)
        mag = abs(coeff)
        if not parts:
            body = str(mag)
        elif mag == 1:
            body = " ".join(parts)
        else:
            body = f"{mag}{joiner}{' '.join(parts)}"
        if idx == 0:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(out)


def parse_poly(text: str, nvars: int | None = None) -> LaurentPoly:
    """Parse the output of :func:`format_poly` (and mild variations of it).

    Accepts ``*`` between factors and arbitrary spacing.  The variable
    count is inferred from the letters present unless given explicitly.
    """
    if re.search(r"\d\s+\d", text):
        raise ValueError(f"cannot parse polynomial {text!r}: adjacent numbers")
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial string")
    if nvars is None:
        nvars = 2 if re.search(r"[xy]", s) else 1
    cls = poly_class(nvars)
    index = {name: k for k, name in enumerate(cls.variables)}
    terms = []
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, mono = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (digits is None and not mono) or (pos > 0 and sign is None):
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        coeff = int(digits) if digits is not None else 1
        if sign == "-":
            coeff = -coeff
        exps = [0] * nvars
        for fm in _FACTOR.finditer(mono):
            name = fm.group(1)
            if name not in index:
                raise ValueError(f"variable {name!r} not in {cls.variables}")
            exps[index[name]] += int(fm.group(2)) if fm.group(2) is not None else 1
        terms.append((tuple(exps), coeff))
        pos = m.end()
    return cls(terms)
