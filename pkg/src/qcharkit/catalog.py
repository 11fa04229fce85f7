"""Built-in conjecture-verification catalog.

Each case replays one worked scenario at desk scale: it runs the limit sweeps,
compares against frozen closed forms, and reports one verdict per clause. A
comparison can only come out REFUTED when everything it depends on actually
stabilized; any engine failure on the way (including a sweep that exhausts its
budget) downgrades the clause to INCONCLUSIVE and keeps the sweep log.

Two of the frozen targets deliberately differ from commonly printed variants;
the case notes state the variant and the self-consistency argument that
excludes it, and a dedicated clause witnesses the difference. Nothing is
reconciled silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .braid import braid_act_word
from .cartan import CartanDatum, WeightVector, build_cartan
from .errors import EngineError, FactorizationError, NoLimitError
from .limits import (LimitReport, const_flip, factor_const_nonconst,
                     geometric_series, product_window, projected_limit,
                     series_agree_on_window, shifted_const_formula,
                     usual_char_window, w0_product_formula, weyl_char_image)
from .qchar import a_chain
from .rings import (CAMonomial, GradedSeries, LWeightMonomial, YMonomial,
                    embed_y_as_lweight, wt_degree)


class Verdict(str, Enum):
    CONFIRMED = "CONFIRMED-at-truncation"
    REFUTED = "REFUTED-at-truncation"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Clause:
    name: str
    status: Verdict
    detail: str = ""


@dataclass
class CaseResult:
    name: str
    clauses: list[Clause] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    sweep_log: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> Verdict:
        statuses = {c.status for c in self.clauses}
        if Verdict.REFUTED in statuses:
            return Verdict.REFUTED
        if Verdict.INCONCLUSIVE in statuses:
            return Verdict.INCONCLUSIVE
        return Verdict.CONFIRMED


class _Case:
    def __init__(self, name: str):
        self.result = CaseResult(name)

    def note(self, text: str) -> None:
        self.result.notes.append(text)

    def clause(self, name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
        except NoLimitError as exc:
            self.result.sweep_log.extend(exc.sweep_log)
            self.result.clauses.append(Clause(name, Verdict.INCONCLUSIVE, str(exc)))
            return
        except EngineError as exc:
            self.result.clauses.append(
                Clause(name, Verdict.INCONCLUSIVE, f"{type(exc).__name__}: {exc}"))
            return
        self.result.clauses.append(
            Clause(name, Verdict.CONFIRMED if ok else Verdict.REFUTED, detail))


_limit_cache: dict[tuple, LimitReport] = {}


def _limit(datum: CartanDatum, word, i: int, m: YMonomial | None = None,
           cap: int = 12, engine: str = "auto") -> LimitReport:
    m = YMonomial.one() if m is None else m
    key = (datum.label, tuple(word), i, m, cap, engine)
    if key not in _limit_cache:
        _limit_cache[key] = projected_limit(datum, word, i, m, cap, engine=engine)
    return _limit_cache[key]


def _eq(series: GradedSeries, terms: dict) -> tuple[bool, str]:
    if series.terms == terms:
        return True, f"{len(terms)} term(s) match"
    missing = [m for m in terms if m not in series.terms]
    extra = [m for m in series.terms if m not in terms]
    return False, f"{len(missing)} missing, {len(extra)} unexpected term(s)"


def _height_filtered(datum: CartanDatum, word, cap: int, pairs) -> dict:
    out = {}
    for mono, coeff in pairs:
        h = datum.cone_height(wt_degree(datum, mono), word)
        if h is not None and h <= cap:
            out[mono] = coeff
    return out


def _minaff_head(l: int) -> YMonomial:
    return YMonomial.from_dict({(2, 2 * t): 1 for t in range(1, l + 1)})


# closed-form term maps, frozen from the worked scenarios

def _sl2_e_terms(datum: CartanDatum, cap: int) -> dict:
    return {a_chain(datum, 1, 0, n): 1 for n in range(cap + 1)}


def _sl3_e_terms(datum: CartanDatum, cap: int) -> dict:
    pairs = []
    for n in range(-1, cap):
        for m in range(-1, n + 1):
            pairs.append((a_chain(datum, 1, 0, n + 1) * a_chain(datum, 2, 1, m + 1), 1))
    return _height_filtered(datum, (), cap, pairs)


def _sl3_s1_a_terms(datum: CartanDatum, cap: int) -> dict:
    pairs = [(a_chain(datum, 2, 1, m + 1), 1) for m in range(-1, cap)]
    return _height_filtered(datum, (1,), cap, pairs)


def _c_s2s1_terms(datum: CartanDatum, cap: int, sign: int = 1, word=(2, 1)) -> dict:
    al1, al2 = datum.alpha(1), datum.alpha(2)
    pairs = []
    for M in range(0, cap + 1):
        for N in range(0, M + 1):
            pairs.append((CAMonomial.e_term(sign * (N * al1 + M * al2)), 1))
    return _height_filtered(datum, word, cap, pairs)


def _minaff_s1_a_terms(datum: CartanDatum, l: int, cap: int) -> dict:
    pairs = []
    for N in range(-1, cap + 1):
        for M in range(-1, min(N, l - 1) + 1):
            pairs.append((a_chain(datum, 2, 2 * l + 1, N + 1)
                          * a_chain(datum, 1, 2 * l + 2, M + 1), 1))
    return _height_filtered(datum, (1,), cap, pairs)


def _minaff_s2s1_a_terms(datum: CartanDatum, l: int, cap: int) -> dict:
    pairs = [(a_chain(datum, 1, 2 * l + 2, n), 1) for n in range(l + 1)]
    return _height_filtered(datum, (2, 1), cap, pairs)


_MINAFF_NOTE = (
    "the non-constant part is frozen with node-1 chain lengths 0..l (s2s1 side) "
    "and inner bound M <= min(N, l-1) (s1 side), the string length carried by the "
    "twisted head; the variant with one extra chain step fails the l=0 degeneration "
    "against the plain tower case and is witnessed absent by its own clause")

_S1_STEP_NOTE = (
    "the node-2 chain of the s1 target steps through odd shifts 1, -1, -3, ...; "
    "a variant with an even second step is excluded by the parity of node-2 "
    "generator shifts in this tower and is not stored")


def _case_sl2_e() -> CaseResult:
    c = _Case("sl2-e")
    A1 = build_cartan("A", 1)

    def conv():
        rep = _limit(A1, (), 1)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)
    c.clause("matches-chain-form",
             lambda: _eq(_limit(A1, (), 1).value, _sl2_e_terms(A1, 12)))

    def factor():
        try:
            cc, aa = factor_const_nonconst(_limit(A1, (), 1).value)
        except FactorizationError as exc:
            return False, str(exc)
        return (cc.terms == {CAMonomial.one(1): 1}
                and aa == _limit(A1, (), 1).value), "c = 1, a = S"
    c.clause("factorization-pure-a", factor)
    return c.result


def _case_sl2_s1() -> CaseResult:
    c = _Case("sl2-s1")
    A1 = build_cartan("A", 1)
    geom = geometric_series(A1, (1,), 12, [((1,), 1)])

    def conv():
        rep = _limit(A1, (1,), 1)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)
    c.clause("matches-geometric-form", lambda: _eq(_limit(A1, (1,), 1).value, geom.terms))

    def factor():
        try:
            cc, aa = factor_const_nonconst(_limit(A1, (1,), 1).value)
        except FactorizationError as exc:
            return False, str(exc)
        return (cc == _limit(A1, (1,), 1).value
                and aa.terms == {CAMonomial.one(1): 1}), "c = S, a = 1"
    c.clause("factorization-pure-e", factor)
    return c.result


def _case_sl3_e() -> CaseResult:
    c = _Case("sl3-e")
    A2 = build_cartan("A", 2)

    def conv():
        rep = _limit(A2, (), 1)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)
    c.clause("matches-double-chain-form",
             lambda: _eq(_limit(A2, (), 1).value, _sl3_e_terms(A2, 12)))
    return c.result


def _case_sl3_s1() -> CaseResult:
    c = _Case("sl3-s1")
    A2 = build_cartan("A", 2)
    c.note(_S1_STEP_NOTE)

    def conv():
        rep = _limit(A2, (1,), 1)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)

    def factor():
        try:
            cc, aa = factor_const_nonconst(_limit(A2, (1,), 1).value)
        except FactorizationError as exc:
            return False, str(exc)
        geom = geometric_series(A2, (1,), 12, [((1, 0), 1)])
        ok_c = cc == geom
        ok_a, detail = _eq(aa, _sl3_s1_a_terms(A2, 12))
        return ok_c and ok_a, detail if not ok_a else "c geometric, a node-2 chains"
    c.clause("factorization-matches", factor)
    return c.result


def _case_sl3_s2s1() -> CaseResult:
    c = _Case("sl3-s2s1")
    A2 = build_cartan("A", 2)

    def conv():
        rep = _limit(A2, (2, 1), 1)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)
    c.clause("matches-double-geometric-form",
             lambda: _eq(_limit(A2, (2, 1), 1).value, _c_s2s1_terms(A2, 12)))

    def factor():
        try:
            cc, aa = factor_const_nonconst(_limit(A2, (2, 1), 1).value)
        except FactorizationError as exc:
            return False, str(exc)
        return (cc == _limit(A2, (2, 1), 1).value
                and aa.terms == {CAMonomial.one(2): 1}), "c = S, a = 1"
    c.clause("factorization-pure-e", factor)
    return c.result


def _case_sl3_identities() -> CaseResult:
    c = _Case("sl3-identities")
    A2 = build_cartan("A", 2)
    for wa, wb in (((2,), ()), ((1, 2), (1,)), ((1, 2, 1), (2, 1))):
        def cmp(wa=wa, wb=wb):
            ra = projected_limit(A2, wa, 1, cap=6)
            rb = _limit(A2, wb, 1).value.retruncate(6)
            return series_agree_on_window(ra.value, rb)
        c.clause(f"agrees-{''.join(map(str, wa)) or 'e'}-vs-{''.join(map(str, wb)) or 'e'}", cmp)
    return c.result


def _case_minaff(word: tuple, l: int) -> CaseResult:
    wname = "s1" if word == (1,) else "s2s1"
    c = _Case(f"minaff-{wname}-l{l}")
    A2 = build_cartan("A", 2)
    m = _minaff_head(l)
    c.note(_MINAFF_NOTE)

    def conv():
        rep = _limit(A2, word, 1, m)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)

    def factor():
        try:
            cc, aa = factor_const_nonconst(_limit(A2, word, 1, m).value)
        except FactorizationError as exc:
            return False, str(exc)
        if word == (1,):
            ok_c = cc == geometric_series(A2, (1,), 12, [((1, 0), 1)])
            ok_a, det = _eq(aa, _minaff_s1_a_terms(A2, l, 12))
        else:
            ok_c = cc.terms == _c_s2s1_terms(A2, 12)
            ok_a, det = _eq(aa, _minaff_s2s1_a_terms(A2, l, 12))
        return ok_c and ok_a, det if not ok_a else "c and a match frozen forms"
    c.clause("factorization-matches", factor)

    def overshoot():
        _, aa = factor_const_nonconst(_limit(A2, word, 1, m).value)
        if word == (1,):
            bad = a_chain(A2, 2, 2 * l + 1, l + 1) * a_chain(A2, 1, 2 * l + 2, l + 1)
        else:
            bad = a_chain(A2, 1, 2 * l + 2, l + 1)
        h = A2.cone_height(wt_degree(A2, bad), word)
        visible = h is not None and h <= 12
        return visible and bad not in aa.terms, \
            f"extra chain term is {'absent' if bad not in aa.terms else 'PRESENT'} at height {h}"
    c.clause("printed-overshoot-term-absent", overshoot)
    return c.result


def _flip_product(datum: CartanDatum, word, i: int, m: YMonomial | None,
                  cap_out: int) -> GradedSeries:
    rep = _limit(datum, word, i, m)
    cc, aa = factor_const_nonconst(rep.value)
    flipped = const_flip(cc)
    return product_window(datum, (), cap_out, [flipped.terms, aa.terms])


def _case_flip_sl2_s1() -> CaseResult:
    c = _Case("flip-sl2-s1")
    A1 = build_cartan("A", 1)

    def cmp():
        prod = _flip_product(A1, (1,), 1, None, 6)
        target = _height_filtered(A1, (), 6,
                                  [(CAMonomial.e_term(-n * A1.alpha(1)), 1) for n in range(13)])
        return _eq(prod, target)
    c.clause("flip-product-matches-target", cmp)
    return c.result


def _case_flip_sl3_s1() -> CaseResult:
    c = _Case("flip-sl3-s1")
    A2 = build_cartan("A", 2)
    c.note(_S1_STEP_NOTE)

    def cmp():
        prod = _flip_product(A2, (1,), 1, None, 6)
        neg = {CAMonomial.e_term(-n * A2.alpha(1)): 1 for n in range(7)}
        chains = {a_chain(A2, 2, 1, m + 1): 1 for m in range(-1, 6)}
        target = product_window(A2, (), 6, [neg, chains])
        return (prod == target), f"{len(target.terms)} term(s) compared"
    c.clause("flip-product-matches-target", cmp)
    return c.result


def _case_flip_sl3_s2s1() -> CaseResult:
    c = _Case("flip-sl3-s2s1")
    A2 = build_cartan("A", 2)

    def cmp():
        prod = _flip_product(A2, (2, 1), 1, None, 6)
        target = GradedSeries(A2, (), 6, _c_s2s1_terms(A2, 6, sign=-1, word=()))
        return (prod == target), f"{len(target.terms)} term(s) compared"
    c.clause("flip-product-matches-target", cmp)

    def crosslink():
        rep = _limit(A2, (2, 1), 1)
        cc, _ = factor_const_nonconst(rep.value)
        return series_agree_on_window(const_flip(cc), shifted_const_formula(A2, (0, 1), 6))
    c.clause("flip-equals-shifted-constant", crosslink)
    return c.result


def _case_flip_minaff(word: tuple, l: int) -> CaseResult:
    wname = "s1" if word == (1,) else "s2s1"
    c = _Case(f"flip-minaff-{wname}-l{l}")
    A2 = build_cartan("A", 2)
    m = _minaff_head(l)
    c.note(_MINAFF_NOTE)

    def cmp():
        prod = _flip_product(A2, word, 1, m, 6)
        if word == (1,):
            neg = {CAMonomial.e_term(-n * A2.alpha(1)): 1 for n in range(7)}
            a_pairs = []
            for N in range(-1, 8):
                for M in range(-1, min(N, l - 1) + 1):
                    a_pairs.append((a_chain(A2, 2, 2 * l + 1, N + 1)
                                    * a_chain(A2, 1, 2 * l + 2, M + 1), 1))
            a_dict = {mo: 1 for mo, _ in a_pairs}
        else:
            neg = _c_s2s1_terms(A2, 6, sign=-1, word=())
            a_dict = {a_chain(A2, 1, 2 * l + 2, n): 1 for n in range(l + 1)}
        target = product_window(A2, (), 6, [neg, a_dict])
        return (prod == target), f"{len(target.terms)} term(s) compared"
    c.clause("flip-product-matches-target", cmp)
    return c.result


def _case_w0(label: tuple[str, int], i: int, cap: int, engine: str = "auto") -> CaseResult:
    family, rank = label
    datum = build_cartan(family, rank)
    c = _Case(f"w0-{family.lower()}{rank}-i{i}")

    def conv():
        rep = _limit(datum, datum.longest_word, i, cap=cap, engine=engine)
        return rep.converged, f"stable from k={rep.stable_k}, R={rep.stable_R}"
    c.clause("limit-converges", conv)

    def cmp():
        rep = _limit(datum, datum.longest_word, i, cap=cap, engine=engine)
        formula = w0_product_formula(datum, i, cap)
        return (rep.value == formula), f"{len(formula.terms)} term(s) compared"
    c.clause("matches-product-formula", cmp)

    def crosslink():
        rep = _limit(datum, datum.longest_word, i, cap=cap, engine=engine)
        cc, aa = factor_const_nonconst(rep.value)
        if aa.terms != {CAMonomial.one(datum.rank): 1}:
            return False, "value is not purely constant-direction"
        mu = tuple(1 if t == datum.bar_node(i) else 0 for t in datum.nodes())
        return series_agree_on_window(const_flip(cc), shifted_const_formula(datum, mu, cap))
    c.clause("flip-equals-shifted-constant", crosslink)
    return c.result


def _case_shifted_const() -> CaseResult:
    c = _Case("shifted-const")
    A1 = build_cartan("A", 1)
    A2 = build_cartan("A", 2)

    def neg_coweight():
        s = shifted_const_formula(A2, (-1, -2), 6)
        return s.terms == {CAMonomial.one(2): 1}, "antidominant coweight gives c = 1"
    c.clause("antidominant-is-unit", neg_coweight)

    def a1():
        s = shifted_const_formula(A1, (1,), 8)
        target = {CAMonomial.e_term(-n * A1.alpha(1)): 1 for n in range(9)}
        return _eq(s, target)
    c.clause("rank1-fundamental", a1)

    def a2_omega2():
        s = shifted_const_formula(A2, (0, 1), 6)
        return _eq(s, _c_s2s1_terms(A2, 6, sign=-1, word=()))
    c.clause("rank2-second-fundamental", a2_omega2)

    def a2_omega1():
        s = shifted_const_formula(A2, (1, 0), 6)
        al1, al2 = A2.alpha(1), A2.alpha(2)
        pairs = [(CAMonomial.e_term(-(N * al1 + M * al2)), 1)
                 for N in range(7) for M in range(N + 1)]
        return _eq(s, _height_filtered(A2, (), 6, pairs))
    c.clause("rank2-first-fundamental", a2_omega1)
    return c.result


def _dual_twist_monomial(datum: CartanDatum, i: int, s: int) -> LWeightMonomial:
    out = {(i, s): -1}
    di = datum.d(i)
    for j in datum.nodes():
        if j == i:
            continue
        cij = datum.c(i, j)
        offs = {-1: (di,), -2: (0, 2), -3: (-1, 1, 3)}.get(cij, ())
        for o in offs:
            out[(j, s + o)] = out.get((j, s + o), 0) + 1
    return LWeightMonomial.from_parts(datum.rank, out, WeightVector.zero(datum.rank))


def _case_psitilde() -> CaseResult:
    c = _Case("psitilde")
    c.note(
        "the start shift of the twisted head is 2*d_i minus the product of the "
        "lacing number and the dual Coxeter number; distributing d_i over the "
        "whole exponent instead fails at the long nodes of B2 and G2 while the "
        "two readings coincide at every short or simply-laced node")
    for family, rank in (("A", 1), ("A", 2), ("B", 2), ("G", 2)):
        datum = build_cartan(family, rank)
        hv = datum.dual_coxeter
        for i in datum.nodes():
            def cmp(datum=datum, i=i, hv=hv):
                lhs = _dual_twist_monomial(datum, i, 0)
                bar = datum.bar_node(i)
                shift = 2 * datum.d(bar) - datum.lacing * hv
                word = datum.reduce_word((i,) + datum.longest_word)
                rhs = braid_act_word(datum, word, 1,
                                     LWeightMonomial.psi_var(datum.rank, bar, shift, -1))
                return lhs == rhs, f"word {word}, start shift {shift}"
            c.clause(f"{family.lower()}{rank}-node{i}", cmp)
    return c.result


def _case_lweight_bullets() -> CaseResult:
    c = _Case("lweight-bullets")
    A2 = build_cartan("A", 2)
    psi_inv = LWeightMonomial.psi_var(2, 1, 0, -1)

    def kr_s1():
        want = (LWeightMonomial.psi_var(2, 1, 2)
                * LWeightMonomial.psi_var(2, 2, 1, -1))
        got = braid_act_word(A2, (1,), 1, psi_inv)
        return got == want, "node-1 twist of the plain head"
    c.clause("kr-s1", kr_s1)

    def kr_s2s1():
        want = LWeightMonomial.psi_var(2, 2, 3)
        got = braid_act_word(A2, (2, 1), 1, psi_inv)
        return got == want, "double twist of the plain head"
    c.clause("kr-s2s1", kr_s2s1)

    for l in (1, 2):
        head = psi_inv * embed_y_as_lweight(A2, _minaff_head(l))

        def s1(l=l, head=head):
            want = LWeightMonomial.from_parts(
                2, {(1, 2): 1, (2, 2 * l + 1): -1}, l * A2.omega(2))
            return braid_act_word(A2, (1,), 1, head) == want, f"l={l}"
        c.clause(f"minaff-s1-l{l}", s1)

        def s2s1(l=l, head=head):
            want = LWeightMonomial.from_parts(
                2, {(1, 2): 1, (1, 2 * l + 2): -1, (2, 2 * l + 3): 1},
                l * (A2.omega(1) - A2.omega(2)))
            return braid_act_word(A2, (2, 1), 1, head) == want, f"l={l}"
        c.clause(f"minaff-s2s1-l{l}", s2s1)

        def s1s2s1(l=l, head=head):
            want = LWeightMonomial.from_parts(
                2, {(1, 2 * l + 4): 1, (1, 4): -1, (2, 3): 1}, -l * A2.omega(1))
            return braid_act_word(A2, (1, 2, 1), 1, head) == want, f"l={l}"
        c.clause(f"minaff-s1s2s1-l{l}", s1s2s1)
    return c.result


def _case_usual_char() -> CaseResult:
    c = _Case("usual-char")
    A1 = build_cartan("A", 1)
    A2 = build_cartan("A", 2)
    pairs: list[tuple[CartanDatum, tuple, YMonomial | None, str]] = [
        (A1, (1,), None, "sl2-s1"),
        (A2, (1,), None, "sl3-s1"),
        (A2, (2, 1), None, "sl3-s2s1"),
        (A2, (1, 2, 1), None, "sl3-w0"),
    ]
    for l in (1, 2):
        pairs.append((A2, (1,), _minaff_head(l), f"minaff-s1-l{l}"))
        pairs.append((A2, (2, 1), _minaff_head(l), f"minaff-s2s1-l{l}"))
    for datum, word, m, tag in pairs:
        def cmp(datum=datum, word=word, m=m):
            lhs = usual_char_window(_limit(datum, word, 1, m).value)
            rhs = weyl_char_image(datum, word, usual_char_window(_limit(datum, (), 1, m).value))
            return lhs == rhs, f"{len(lhs)} weight(s) compared"
        c.clause(f"weyl-image-{tag}", cmp)
    return c.result


_CATALOG: dict[str, Callable[[], CaseResult]] = {
    "sl2-e": _case_sl2_e,
    "sl2-s1": _case_sl2_s1,
    "sl3-e": _case_sl3_e,
    "sl3-s1": _case_sl3_s1,
    "sl3-s2s1": _case_sl3_s2s1,
    "sl3-identities": _case_sl3_identities,
    "minaff-s1-l1": lambda: _case_minaff((1,), 1),
    "minaff-s1-l2": lambda: _case_minaff((1,), 2),
    "minaff-s2s1-l1": lambda: _case_minaff((2, 1), 1),
    "minaff-s2s1-l2": lambda: _case_minaff((2, 1), 2),
    "flip-sl2-s1": _case_flip_sl2_s1,
    "flip-sl3-s1": _case_flip_sl3_s1,
    "flip-sl3-s2s1": _case_flip_sl3_s2s1,
    "flip-minaff-s1-l1": lambda: _case_flip_minaff((1,), 1),
    "flip-minaff-s1-l2": lambda: _case_flip_minaff((1,), 2),
    "flip-minaff-s2s1-l1": lambda: _case_flip_minaff((2, 1), 1),
    "flip-minaff-s2s1-l2": lambda: _case_flip_minaff((2, 1), 2),
    "w0-a1-i1": lambda: _case_w0(("A", 1), 1, 8),
    "w0-a2-i1": lambda: _case_w0(("A", 2), 1, 8),
    "w0-a2-i2": lambda: _case_w0(("A", 2), 2, 8),
    "w0-a3-i1": lambda: _case_w0(("A", 3), 1, 4),
    "shifted-const": _case_shifted_const,
    "psitilde": _case_psitilde,
    "lweight-bullets": _case_lweight_bullets,
    "usual-char": _case_usual_char,
}


def case_names() -> list[str]:
    return list(_CATALOG)


def run_case(name: str) -> CaseResult:
    if name not in _CATALOG:
        raise KeyError(f"unknown catalog case {name!r}; see case_names()")
    return _CATALOG[name]()


def verify_report(names: list[str] | None = None) -> list[CaseResult]:
    return [run_case(n) for n in (names if names is not None else case_names())]
