"""q-characters of the finite-dimensional modules the calculus consumes.

Two engines produce the same objects: closed-form sums for rank-1 and rank-2
type-A towers, and an iterative expansion that grows the character downward
from its highest monomial, direction by direction, using the rank-1 string
combinatorics on each node slice. The iterative engine finalizes monomials in
strictly descending weight order, so every demand into a weight level is known
before the level is processed; a monomial's multiplicity is the maximum
demanded by any direction, and any shortfall at an i-dominant monomial spawns
that many fresh rank-1 covers. Either engine feeds the same normalization and
limit pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .braid import braid_act_word
from .cartan import CartanDatum
from .errors import (ConeError, FMInconsistentError, MathDomainError,
                     StepCapError, UnsupportedDatumError)
from .rings import (CAMonomial, SparsePoly, YMonomial, a_expand_to_y,
                    wt_degree, y_ratio_to_a)


@dataclass
class QCharacter:
    datum: CartanDatum
    head: YMonomial
    poly: SparsePoly

    def __post_init__(self):
        assert self.poly.coefficient(self.head) == 1, "head must appear with coefficient 1"

    def dimension(self) -> int:
        return self.poly.coefficient_sum()


def kr_highest_weight(datum: CartanDatum, i: int, k: int, base_shift: int = 0) -> YMonomial:
    """The length-k q-string ending just below the base shift at node i."""
    if k < 1:
        raise MathDomainError("string length must be >= 1")
    di = datum.d(i)
    out: dict = {}
    for t in range(1, k + 1):
        key = (i, base_shift + di * (-2 * t + 1))
        out[key] = out.get(key, 0) + 1
    return YMonomial.from_dict(out)


def a_chain(datum: CartanDatum, i: int, top_shift: int, length: int) -> CAMonomial:
    """Product of A[i, top - 2*d_i*l]^{-1} for l = 0..length-1."""
    di = datum.d(i)
    out: dict = {}
    for l in range(length):
        key = (i, top_shift - 2 * di * l)
        out[key] = out.get(key, 0) - 1
    return CAMonomial(datum.rank, tuple(sorted(out.items())))


def kr_qchar_closed(datum: CartanDatum, i: int, k: int, base_shift: int = 0) -> QCharacter:
    """Closed-form tower characters for rank 1 and the rank-2 type-A datum."""
    head = kr_highest_weight(datum, i, k, base_shift)
    chains: list[CAMonomial] = []
    if datum.label == "A1":
        for n in range(k + 1):
            chains.append(a_chain(datum, 1, base_shift, n))
    elif datum.label == "A2" and i in (1, 2):
        j = 2 if i == 1 else 1
        for n in range(-1, k):
            for m in range(-1, n + 1):
                chains.append(a_chain(datum, i, base_shift, n + 1)
                              * a_chain(datum, j, base_shift + 1, m + 1))
    else:
        raise UnsupportedDatumError(
            f"no closed form for {datum.label} node {i}; use the iterative engine")
    terms: dict = {}
    for ca in chains:
        m = head * a_expand_to_y(datum, ca)
        terms[m] = terms.get(m, 0) + 1
    return QCharacter(datum, head, SparsePoly(terms))


def _slice_strings(datum: CartanDatum, m: YMonomial, i: int) -> list[list[int]]:
    """Greedy maximal q_i-string decomposition of the node-i slice.

    Taking the longest string from the lowest shift first yields the unique
    decomposition whose strings are pairwise nested or disjoint."""
    work = {s: e for (j, s), e in m.y if j == i}
    step = 2 * datum.d(i)
    strings = []
    while work:
        s = min(work)
        chain = []
        while s in work:
            chain.append(s)
            work[s] -= 1
            if work[s] == 0:
                del work[s]
            s += step
        strings.append(chain)
    return strings


def _cover_tail(datum: CartanDatum, m: YMonomial, i: int) -> list[tuple[YMonomial, int]]:
    """Terms below m in the rank-1 character of the i-slice through m.

    Each maximal q_i-string contributes its chain of partial A-inverse
    products; the cover is the product of those chains, minus the leading
    term m itself."""
    strings = _slice_strings(datum, m, i)
    if not strings:
        return []
    di = datum.d(i)
    option_sets = []
    for chain in strings:
        top = chain[-1]
        opts = [a_chain(datum, i, top + di, j) for j in range(len(chain) + 1)]
        option_sets.append(opts)
    acc: dict[CAMonomial, int] = {}
    for combo in iter_product(*option_sets):
        ca = combo[0]
        for extra in combo[1:]:
            ca = ca * extra
        acc[ca] = acc.get(ca, 0) + 1
    out = []
    unit = CAMonomial.one(datum.rank)
    for ca, c in acc.items():
        if ca == unit:
            c -= 1
        if c:
            out.append((m * a_expand_to_y(datum, ca), c))
    return out


def fm_expand(datum: CartanDatum, head: YMonomial, step_cap: int = 500_000) -> QCharacter:
    """Iterative character expansion from a dominant highest monomial.

    Monomials are processed level by level in descending weight (level =
    height of the drop from the head), so all multiplicity demands into a
    level are final before it is read. Raises when the slice bookkeeping
    cannot be met, which is the honest signal that the module is outside
    this algorithm's reach.
    """
    if not head.is_dominant:
        raise MathDomainError(f"head must be dominant: {head}")
    head_wt = wt_degree(datum, head)

    def depth(mono: YMonomial) -> int:
        rc = datum.root_coords_int(head_wt - wt_degree(datum, mono))
        assert rc is not None, "expansion left the head's root-lattice coset"
        return sum(rc)

    final: dict[YMonomial, int] = {}
    demands: dict[YMonomial, dict[int, int]] = {}
    pending: dict[int, set[YMonomial]] = {0: {head}}
    steps = 0
    while pending:
        level = min(pending)
        for m in sorted(pending.pop(level), key=lambda x: x.y):
            dem = demands.pop(m, {})
            mult = 1 if level == 0 else max(dem.values(), default=0)
            if mult <= 0:
                continue
            final[m] = mult
            for i in datum.nodes():
                has_negative = any(e < 0 for (j, _), e in m.y if j == i)
                dem_i = dem.get(i, 0)
                if has_negative:
                    if dem_i != mult:
                        raise FMInconsistentError(
                            f"fm-inconsistent: direction {i} accounts for {dem_i} "
                            f"of multiplicity {mult} at {m.y}")
                    continue
                extra = mult - dem_i
                if extra < 0:
                    raise FMInconsistentError(
                        f"fm-inconsistent: direction {i} over-demands {dem_i} > {mult} at {m.y}")
                if extra == 0:
                    continue
                for m2, c in _cover_tail(datum, m, i):
                    lvl2 = depth(m2)
                    assert lvl2 > level
                    demands.setdefault(m2, {})
                    demands[m2][i] = demands[m2].get(i, 0) + extra * c
                    pending.setdefault(lvl2, set()).add(m2)
                    steps += 1
                    if steps > step_cap:
                        raise StepCapError(f"step-cap-exceeded: {step_cap}")
    return QCharacter(datum, head, SparsePoly(final))


def kr_shape_of(datum: CartanDatum, m: YMonomial) -> tuple[int, int, int] | None:
    """(node, length, base shift) if m is a single contiguous q-string."""
    if not m.y:
        return None
    nodes = {j for (j, _), _ in m.y}
    if len(nodes) != 1:
        return None
    i = nodes.pop()
    if any(e != 1 for _, e in m.y):
        return None
    shifts = sorted(s for (_, s), _ in m.y)
    di = datum.d(i)
    if any(b - a != 2 * di for a, b in zip(shifts, shifts[1:])):
        return None
    return i, len(shifts), shifts[-1] + di


def w_normalized_qchar(datum: CartanDatum, qc: QCharacter, word) -> SparsePoly:
    """Divide by the braid twist of the head and refactor each term over A.

    Every output degree is required to lie in the cone of the twisting word."""
    tm_inv = braid_act_word(datum, tuple(word), 1, qc.head).inverse()
    out: dict = {}
    for m, c in qc.poly.items():
        ca = y_ratio_to_a(datum, m * tm_inv)
        if datum.cone_coords(wt_degree(datum, ca), tuple(word)) is None:
            raise ConeError(
                f"normalization-not-in-cone: degree {wt_degree(datum, ca).omega} "
                f"outside cone of word {tuple(word)}")
        out[ca] = out.get(ca, 0) + c
    return SparsePoly(out)


def usual_char_from_qchar(datum: CartanDatum, q) -> SparsePoly:
    """Forget spectral data: every monomial collapses to e^{weight}."""
    poly = q.poly if isinstance(q, QCharacter) else q
    return poly.map_monomials(lambda m: CAMonomial.e_term(wt_degree(datum, m)))
