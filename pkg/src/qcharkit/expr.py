"""Text grammar for monomials of every flavor.

The grammar is juxtaposition of powered generators: `Y[i,s]`, `A[i,s]`,
`Psi[i,s]`, `e[a1,...,an]` with root coordinates, `q^w[c1,...,cn]` with
fundamental-weight coordinates, and `^` for integer powers. Whitespace and
`*` separate factors but mean nothing. The literal `1` is the unit. A single
expression must stay inside one flavor: Y-generators, or A/e, or Psi/q^w.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import CartanDatum, WeightVector
from .errors import ExprSyntaxError
from .rings import CAMonomial, LWeightMonomial, YMonomial

_FLAVOR_OF = {"Y": "y", "A": "ca", "e": "ca", "Psi": "lweight", "q^w": "lweight"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    value: object
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch == "*":
            i += 1
            continue
        if text.startswith("q^w", i):
            toks.append(_Tok("NAME", "q^w", i))
            i += 3
            continue
        if text.startswith("Psi", i):
            toks.append(_Tok("NAME", "Psi", i))
            i += 3
            continue
        if ch in ("Y", "A", "e"):
            toks.append(_Tok("NAME", ch, i))
            i += 1
            continue
        if ch in "[],^":
            toks.append(_Tok(ch, ch, i))
            i += 1
            continue
        if ch == "-" or ch == "+" or ch.isdigit():
            j = i + 1 if ch in "+-" else i
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                raise ExprSyntaxError("sign without digits", text, i)
            toks.append(_Tok("INT", int(text[i:k]), i))
            i = k
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", text, i)
    toks.append(_Tok("END", None, n))
    return toks


class _Parser:
    def __init__(self, datum: CartanDatum, text: str):
        self.datum = datum
        self.text = text
        self.toks = _tokenize(text)
        self.idx = 0

    def peek(self) -> _Tok:
        return self.toks[self.idx]

    def take(self, kind: str, what: str) -> _Tok:
        t = self.toks[self.idx]
        if t.kind != kind:
            raise ExprSyntaxError(f"expected {what}", self.text, t.pos)
        self.idx += 1
        return t

    def int_list(self) -> list[int]:
        self.take("[", "'['")
        vals = [self.take("INT", "an integer").value]
        while self.peek().kind == ",":
            self.idx += 1
            vals.append(self.take("INT", "an integer").value)
        self.take("]", "']' or ','")
        return vals

    def factors(self) -> list[tuple[str, tuple, int, int]]:
        out = []
        while self.peek().kind != "END":
            t = self.peek()
            if t.kind == "INT":
                if t.value != 1:
                    raise ExprSyntaxError("a bare integer is not a monomial (only the unit 1)",
                                          self.text, t.pos)
                self.idx += 1
                if self.peek().kind == "^":
                    self.idx += 1
                    self.take("INT", "an integer power")
                continue
            name = self.take("NAME", "a generator (Y, A, Psi, e, q^w)").value
            coords = self.int_list()
            power = 1
            if self.peek().kind == "^":
                self.idx += 1
                power = self.take("INT", "an integer power").value
            out.append((name, tuple(coords), power, t.pos))
        return out


def parse_expr(datum: CartanDatum, text: str, expect: str = "auto"):
    """Parse one monomial; returns a YMonomial, CAMonomial, or LWeightMonomial.

    `expect` pins the flavor ('y', 'ca', 'lweight'); 'auto' infers it from the
    generators, and the bare unit defaults to a YMonomial."""
    if expect not in ("auto", "y", "ca", "lweight"):
        raise ValueError(f"unknown expect {expect!r}")
    p = _Parser(datum, text)
    factors = p.factors()

    flavor = expect
    for name, _, _, pos in factors:
        f = _FLAVOR_OF[name]
        if flavor in ("auto", f):
            flavor = f
        else:
            raise ExprSyntaxError(
                f"generator {name} does not belong to the {flavor} flavor", text, pos)
    if flavor == "auto":
        flavor = "y"

    rank = datum.rank
    indexed: dict[tuple[int, int], int] = {}
    wv = WeightVector.zero(rank)
    for name, coords, power, pos in factors:
        if name in ("Y", "A", "Psi"):
            if len(coords) != 2:
                raise ExprSyntaxError(f"{name} takes [node,shift]", text, pos)
            i, s = coords
            if i not in datum.nodes():
                raise ExprSyntaxError(f"node {i} out of range for {datum.label}", text, pos)
            indexed[(i, s)] = indexed.get((i, s), 0) + power
        else:
            if len(coords) != rank:
                raise ExprSyntaxError(
                    f"{name} takes {rank} coordinates for {datum.label}", text, pos)
            if name == "e":
                wv = wv + power * datum.weight_from_root(coords)
            else:
                wv = wv + power * WeightVector(coords)

    indexed = {k: v for k, v in indexed.items() if v != 0}
    if flavor == "y":
        return YMonomial.from_dict(indexed)
    if flavor == "ca":
        return CAMonomial.from_parts(rank, indexed, wv)
    return LWeightMonomial.from_parts(rank, indexed, wv)
