"""Projected limits of twisted normalized characters, and their factorizations.

The pipeline: take the tower of characters at a node, normalize each by the
braid twist of its head, push every generator below a shift threshold onto the
lattice (the projection), truncate in the cone completion, and detect
stabilization first along the tower index, then along the threshold. The
stabilized window is the computable stand-in for the double limit.

Both sweeps use the same detector: a value must repeat over a run of
consecutive indices (the window) before it counts as stable, and the inner
sweep will not start counting before the tower is taller than the truncation
cap, since shallow towers agree by accident.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import CartanDatum, WeightVector, Word
from .errors import ConeError, FactorizationError, NoLimitError, UnsupportedDatumError
from .qchar import QCharacter, fm_expand, kr_highest_weight, kr_qchar_closed, w_normalized_qchar
from .rings import CAMonomial, GradedSeries, SparsePoly, YMonomial, graded_divide, wt_degree


def project_piR(datum: CartanDatum, threshold: int | None, poly: SparsePoly) -> SparsePoly:
    """Replace A[i,s]^e for s < threshold by e^{e*alpha_i}; degree-preserving.

    threshold None is the identity (nothing is projected away)."""
    if threshold is None:
        return poly

    def f(mono: CAMonomial) -> CAMonomial:
        keep: dict = {}
        wv = WeightVector(mono.e_omega)
        for (i, s), e in mono.a:
            if s < threshold:
                wv = wv + e * datum.alpha(i)
            else:
                keep[(i, s)] = e
        return CAMonomial.from_parts(datum.rank, keep, wv)

    return poly.map_monomials(f)


_char_memo: dict[tuple, QCharacter] = {}
_norm_memo: dict[tuple, SparsePoly] = {}


def clear_memos() -> None:
    _char_memo.clear()
    _norm_memo.clear()


def _resolve_engine(datum: CartanDatum, m: YMonomial, engine: str) -> str:
    if engine == "auto":
        return "closed" if (m.is_one and datum.label in ("A1", "A2")) else "fm"
    if engine in ("closed", "fm"):
        return engine
    raise ValueError(f"unknown engine {engine!r}")


def tower_character(datum: CartanDatum, i: int, k: int, m: YMonomial,
                    engine: str = "auto", step_cap: int = 500_000) -> QCharacter:
    """Character of the level-k module at node i with extra head factor m."""
    eng = _resolve_engine(datum, m, engine)
    key = (datum.label, i, k, m, eng)
    if key not in _char_memo:
        if eng == "closed":
            if not m.is_one:
                raise UnsupportedDatumError("closed form only covers a bare tower head")
            _char_memo[key] = kr_qchar_closed(datum, i, k)
        else:
            _char_memo[key] = fm_expand(datum, kr_highest_weight(datum, i, k) * m,
                                        step_cap=step_cap)
    return _char_memo[key]


def _normalized(datum: CartanDatum, word: Word, i: int, k: int, m: YMonomial,
                engine: str, step_cap: int) -> SparsePoly:
    eng = _resolve_engine(datum, m, engine)
    key = (datum.label, word, i, k, m, eng)
    if key not in _norm_memo:
        qc = tower_character(datum, i, k, m, eng, step_cap)
        _norm_memo[key] = w_normalized_qchar(datum, qc, word)
    return _norm_memo[key]


@dataclass
class LimitReport:
    converged: bool
    value: GradedSeries | None
    stable_k: int | None
    stable_R: int | None
    sweep_log: list[str] = field(default_factory=list)
    params: dict = field(default_factory=dict)


def _inner_limit(datum: CartanDatum, word: Word, i: int, m: YMonomial, cap: int,
                 R: int, k_max: int, min_k: int, window: int,
                 engine: str, step_cap: int,
                 log: list[str]) -> tuple[GradedSeries, int]:
    run: GradedSeries | None = None
    start = 0
    count = 0
    for k in range(1, k_max + 1):
        poly = _normalized(datum, word, i, k, m, engine, step_cap)
        series = GradedSeries.from_poly(datum, word, cap, project_piR(datum, R, poly))
        if run is not None and series == run:
            count += 1
        else:
            run, start, count = series, k, 1
        if k >= min_k and count >= window:
            return run, start
    log.append(f"R={R}: k sweep reached {k_max} without {window} equal values past k={min_k}")
    raise NoLimitError(
        f"no-limit-detected: tower sweep at R={R} unstable up to k={k_max}", log)


def projected_limit(datum: CartanDatum, word, i: int, m: YMonomial | None = None,
                    cap: int = 6, *, k_max: int | None = None, r_min: int | None = None,
                    min_k: int | None = None, window: int = 3,
                    engine: str = "auto", step_cap: int = 500_000) -> LimitReport:
    """Stabilized truncation of the projected twisted limit at node i.

    Raises NoLimitError (with the sweep log attached) if either sweep
    exhausts its budget; a returned report always has converged=True.
    """
    m = YMonomial.one() if m is None else m
    word = datum.reduce_word(tuple(word))
    if i not in datum.nodes():
        raise ValueError(f"node {i} out of range for {datum.label}")
    if r_min is None:
        r_min = -(2 * cap + 6)
    if k_max is None:
        # deep thresholds stabilize late: partially projected blocks keep
        # mutating until their lattice dressing outgrows the cap, which takes
        # towers about half the threshold depth taller
        k_max = cap + window + 4 + (abs(r_min) + 1) // 2
    if min_k is None:
        min_k = cap + 2
    params = {"word": word, "i": i, "m": m, "cap": cap, "k_max": k_max,
              "r_min": r_min, "min_k": min_k, "window": window,
              "engine": _resolve_engine(datum, m, engine)}
    log: list[str] = []
    run: GradedSeries | None = None
    run_R = 0
    run_k = 0
    count = 0
    for R in range(0, r_min - 1, -1):
        series, k_at = _inner_limit(datum, word, i, m, cap, R, k_max, min_k,
                                    window, engine, step_cap, log)
        if run is not None and series == run:
            count += 1
        else:
            run, run_R, run_k, count = series, R, k_at, 1
        log.append(f"R={R}: stable from k={k_at}, {len(series.terms)} term(s)")
        if count >= window:
            log.append(f"threshold sweep stable from R={run_R}")
            return LimitReport(True, run, run_k, run_R, log, params)
    log.append(f"threshold sweep reached R={r_min} without {window} equal values")
    raise NoLimitError(
        f"no-limit-detected: threshold sweep unstable down to R={r_min}", log)


def factor_const_nonconst(S: GradedSeries) -> tuple[GradedSeries, GradedSeries]:
    """Split S = c * a with a the lattice-free part and c free of generators.

    a is read off as the subseries with zero lattice exponent; c is the graded
    quotient and must come out free of A-variables, otherwise the split does
    not exist at this truncation and we say so."""
    heads = S.degree_zero_terms()
    if len(heads) != 1 or not heads[0][0].is_one or heads[0][1] != 1:
        raise FactorizationError("factorization-failed: series is not unit-headed")
    a = S.subseries(lambda mono: all(x == 0 for x in mono.e_omega))
    c = graded_divide(S, a)
    mixed = [mono for mono in c.terms if mono.a]
    if mixed:
        worst = min(mixed, key=lambda mo: (mo.a, mo.e_omega))
        raise FactorizationError(
            f"factorization-failed: quotient keeps generator content {dict(worst.a)}")
    return c, a


def const_flip(c: GradedSeries) -> GradedSeries:
    """Image of a constant part under e^mu -> e^{-mu}, into the opposite cone.

    The receiving cone is the one of word * longest; heights are preserved
    degree by degree, so the same cap stays meaningful."""
    datum = c.datum
    target = datum.reduce_word(tuple(c.word) + datum.longest_word)
    out = GradedSeries(datum, target, c.cap, {})
    for mono, coeff in c.terms.items():
        if mono.a:
            raise FactorizationError("const-flip needs a constant-direction series")
        flipped = CAMonomial.e_term(-mono.e_weight)
        h = out.height_of(flipped)
        if h is None or h > c.cap:
            raise ConeError(
                f"flip-left-cone: weight {flipped.e_omega} does not fit the cone of {target}")
        out.terms[flipped] = coeff
    return out


def geometric_series(datum: CartanDatum, word, cap: int,
                     factors: list[tuple[tuple[int, ...], int]]) -> GradedSeries:
    """Truncated product of (sum_j e^{j v})^mult for lattice vectors v.

    Each v is given in root coordinates and must sit strictly inside the cone,
    so its multiples have growing height and the sum truncates."""
    word = tuple(word)
    out = GradedSeries.unit(datum, word, cap)
    for rc, mult in factors:
        wv = datum.weight_from_root(rc)
        h = datum.cone_height(wv, word)
        if h is None or h <= 0:
            raise ConeError(f"geometric direction {rc} not strictly inside cone of {word}")
        base = GradedSeries.from_poly(
            datum, word, cap,
            SparsePoly({CAMonomial.e_term(j * wv): 1 for j in range(cap // h + 1)}))
        for _ in range(mult):
            out = out * base
    return out


def w0_product_formula(datum: CartanDatum, i: int, cap: int) -> GradedSeries:
    """Longest-twist limit in closed form: one geometric factor per positive
    root, with exponent the root's coefficient on the node dual to i."""
    bar = datum.bar_node(i)
    factors = [(rc, rc[bar - 1]) for rc in datum.pos_roots if rc[bar - 1] > 0]
    return geometric_series(datum, datum.longest_word, cap, factors)


def shifted_const_formula(datum: CartanDatum, mu: tuple[int, ...], cap: int) -> GradedSeries:
    """Predicted constant part for a head of lattice degree mu (coweight
    coordinates): geometric factors e^{-alpha} with exponent max(0, alpha(mu))."""
    factors = []
    for rc in datum.pos_roots:
        mult = sum(r * u for r, u in zip(rc, mu))
        if mult > 0:
            factors.append((tuple(-r for r in rc), mult))
    return geometric_series(datum, (), cap, factors)


def series_agree_on_window(s1: GradedSeries, s2: GradedSeries) -> tuple[bool, str]:
    """Do two truncations agree wherever both can see?

    Every term of either series whose degree is visible to the other (inside
    its cone and cap) must appear there with the same coefficient."""
    for a, b in ((s1, s2), (s2, s1)):
        for mono, coeff in a.terms.items():
            h = b.height_of(mono)
            if h is None:
                return False, (f"degree {wt_degree(a.datum, mono).omega} of one side "
                               f"is outside the cone of word {b.word}")
            if h <= b.cap and b.terms.get(mono, 0) != coeff:
                return False, (f"coefficient mismatch at degree "
                               f"{wt_degree(a.datum, mono).omega}: "
                               f"{coeff} vs {b.terms.get(mono, 0)}")
    return True, ""


def product_window(datum: CartanDatum, word, cap: int,
                   factor_dicts: list[dict]) -> GradedSeries:
    """Multiply raw term dicts and truncate the result into a cone window.

    The caller is responsible for feeding factors complete far enough that
    every product term at height <= cap is fully accumulated."""
    acc: dict[CAMonomial, int] = {CAMonomial.one(datum.rank): 1}
    for d in factor_dicts:
        nxt: dict[CAMonomial, int] = {}
        for m1, c1 in acc.items():
            for m2, c2 in d.items():
                mm = m1 * m2
                nxt[mm] = nxt.get(mm, 0) + c1 * c2
                if nxt[mm] == 0:
                    del nxt[mm]
        acc = nxt
    out = GradedSeries(datum, tuple(word), cap, {})
    for mono, coeff in acc.items():
        h = out.height_of(mono)
        if h is None:
            raise ConeError(
                f"product term of degree {wt_degree(datum, mono).omega} "
                f"outside cone of {tuple(word)}")
        if h <= cap:
            out.terms[mono] = coeff
    return out


def usual_char_window(series: GradedSeries) -> dict[tuple[int, ...], int]:
    """Forget generator content: weight (fundamental coords) -> multiplicity."""
    out: dict[tuple[int, ...], int] = {}
    for mono, coeff in series.terms.items():
        key = wt_degree(series.datum, mono).omega
        out[key] = out.get(key, 0) + coeff
        if out[key] == 0:
            del out[key]
    return out


def weyl_char_image(datum: CartanDatum, word, chi: dict[tuple[int, ...], int]) -> dict:
    """Push a weight-multiplicity dict through the Weyl action of a word."""
    out: dict[tuple[int, ...], int] = {}
    for key, coeff in chi.items():
        img = datum.act_word(tuple(word), WeightVector(key)).omega
        out[img] = out.get(img, 0) + coeff
    return out
