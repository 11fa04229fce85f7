"""Canonical text, JSON, and LaTeX renderings of monomials and series.

Text output round-trips through the parser. JSON output follows the schema
{datum, head, terms, grading, truncation} with terms as {mono, coeff} pairs in
a deterministic order. LaTeX renders the additive shift s as the literal
spectral parameter a q^s, with the anchor a kept symbolic.
"""

from __future__ import annotations

import json

from .cartan import CartanDatum, WeightVector
from .errors import MathDomainError
from .qchar import QCharacter
from .rings import CAMonomial, GradedSeries, LWeightMonomial, SparsePoly, YMonomial


def _e_root_coords(datum: CartanDatum, wv: WeightVector) -> tuple[int, ...]:
    rc = datum.root_coords_int(wv)
    if rc is None:
        raise MathDomainError(
            f"weight {wv.omega} is not in the root lattice; it has no e[] form")
    return rc


def monomial_text(datum: CartanDatum, m) -> str:
    """Canonical text of a monomial; parse_expr inverts it."""
    parts: list[str] = []

    def powered(sym: str, i: int, s: int, e: int) -> str:
        return f"{sym}[{i},{s}]" + (f"^{e}" if e != 1 else "")

    if isinstance(m, YMonomial):
        for (i, s), e in sorted(m.y):
            parts.append(powered("Y", i, s, e))
    elif isinstance(m, CAMonomial):
        for (i, s), e in sorted(m.a):
            parts.append(powered("A", i, s, e))
        if any(x != 0 for x in m.e_omega):
            rc = _e_root_coords(datum, WeightVector(m.e_omega))
            parts.append("e[" + ",".join(str(x) for x in rc) + "]")
    elif isinstance(m, LWeightMonomial):
        for (i, s), e in sorted(m.psi):
            parts.append(powered("Psi", i, s, e))
        if any(x != 0 for x in m.prefactor):
            parts.append("q^w[" + ",".join(str(x) for x in m.prefactor) + "]")
    else:
        raise TypeError(f"no text form for {type(m).__name__}")
    return " ".join(parts) if parts else "1"


def _latex_shift(s: int) -> str:
    if s == 0:
        return "a"
    if s == 1:
        return "aq"
    return f"aq^{{{s}}}"


def _latex_combo(coeffs, symbol: str) -> str:
    body = ""
    for idx, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if body else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        body += f"{sign}{mag}\\{symbol}_{idx}"
    return body


def monomial_latex(datum: CartanDatum, m) -> str:
    parts: list[str] = []

    def powered(sym: str, i: int, s: int, e: int) -> str:
        sup = f"^{{{e}}}" if e != 1 else ""
        return f"{sym}{sup}_{{{i},{_latex_shift(s)}}}"

    if isinstance(m, YMonomial):
        for (i, s), e in sorted(m.y):
            parts.append(powered("Y", i, s, e))
    elif isinstance(m, CAMonomial):
        for (i, s), e in sorted(m.a):
            parts.append(powered("A", i, s, e))
        if any(x != 0 for x in m.e_omega):
            rc = _e_root_coords(datum, WeightVector(m.e_omega))
            parts.append(f"e^{{{_latex_combo(rc, 'alpha')}}}")
    elif isinstance(m, LWeightMonomial):
        for (i, s), e in sorted(m.psi):
            parts.append(powered("\\Psi", i, s, e))
        if any(x != 0 for x in m.prefactor):
            parts.append(f"e^{{{_latex_combo(m.prefactor, 'omega')}}}")
    else:
        raise TypeError(f"no LaTeX form for {type(m).__name__}")
    return "".join(parts) if parts else "1"


def _sorted_items(datum: CartanDatum, terms: dict) -> list[tuple]:
    return sorted(terms.items(), key=lambda kv: monomial_text(datum, kv[0]))


def _series_items(series: GradedSeries) -> list[tuple]:
    return sorted(series.terms.items(),
                  key=lambda kv: (series.height_of(kv[0]),
                                  monomial_text(series.datum, kv[0])))


def terms_latex(datum: CartanDatum, items) -> str:
    out = ""
    for m, c in items:
        body = monomial_latex(datum, m)
        mag = abs(c)
        coeff = "" if (mag == 1 and body != "1") else str(mag)
        if mag == 1 and body == "1":
            body = ""
            coeff = "1"
        out += ("-" if c < 0 else ("+" if out else "")) + coeff + body
    return out or "0"


def poly_latex(datum: CartanDatum, poly: SparsePoly) -> str:
    return terms_latex(datum, _sorted_items(datum, poly.terms))


def series_latex(series: GradedSeries) -> str:
    """Height-ordered rendering, so truncated geometric series read naturally."""
    return terms_latex(series.datum, _series_items(series))


def _word_tag(word) -> str:
    return ",".join(str(i) for i in word) if word else "e"


def qchar_json_obj(datum: CartanDatum, qc: QCharacter) -> dict:
    return {
        "datum": datum.label,
        "head": monomial_text(datum, qc.head),
        "terms": [{"mono": monomial_text(datum, m), "coeff": c}
                  for m, c in _sorted_items(datum, qc.poly.terms)],
        "grading": "Y",
        "truncation": None,
    }


def poly_json_obj(datum: CartanDatum, poly: SparsePoly, grading: str,
                  head=None) -> dict:
    return {
        "datum": datum.label,
        "head": None if head is None else monomial_text(datum, head),
        "terms": [{"mono": monomial_text(datum, m), "coeff": c}
                  for m, c in _sorted_items(datum, poly.terms)],
        "grading": grading,
        "truncation": None,
    }


def series_json_obj(series: GradedSeries, meta: dict | None = None) -> dict:
    obj = {
        "datum": series.datum.label,
        "head": None,
        "terms": [{"mono": monomial_text(series.datum, m), "coeff": c}
                  for m, c in _series_items(series)],
        "grading": f"cone:{_word_tag(series.word)}",
        "truncation": series.cap,
    }
    if meta:
        obj["meta"] = meta
    return obj


def canonical_json_bytes(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")


def pretty_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)
