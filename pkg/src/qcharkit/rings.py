"""Exact sparse monomial/polynomial/truncated-series algebra.

Three monomial flavors share one representation idea: a sorted tuple of
((node, shift), exponent) pairs with zero exponents dropped, so monomials are
hashable values usable as dict keys. The spectral parameter is a single
symbolic anchor times integer powers of q; only the integer shift is stored
and q is never evaluated.

  * YMonomial        -- Laurent monomials in Y[i,s]
  * CAMonomial       -- Laurent monomials in A[i,s] times a lattice factor
                        e^lambda (lambda kept in fundamental-weight coords)
  * LWeightMonomial  -- Laurent monomials in Psi[i,s] times a prefactor q^lambda

SparsePoly is a plain dict {monomial: int}; GradedSeries is a SparsePoly-like
term map truncated to a cone height cap, the finite stand-in for the graded
completions the limits live in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .cartan import CartanDatum, WeightVector, Word
from .errors import ConeError, NonUnitDivisorError, NotAnAMonomialError

SpectralIndex = tuple[int, int]
ExpItems = tuple[tuple[SpectralIndex, int], ...]


def _freeze(d: dict) -> ExpItems:
    return tuple(sorted((k, v) for k, v in d.items() if v != 0))


def _merge(a: ExpItems, b: ExpItems, sign: int = 1) -> ExpItems:
    out = dict(a)
    for k, v in b:
        out[k] = out.get(k, 0) + sign * v
    return _freeze(out)


def _scale(a: ExpItems, n: int) -> ExpItems:
    if n == 0:
        return ()
    return tuple((k, n * v) for k, v in a)


@dataclass(frozen=True)
class YMonomial:
    y: ExpItems = ()

    @staticmethod
    def one() -> "YMonomial":
        return YMonomial()

    @staticmethod
    def var(i: int, s: int, e: int = 1) -> "YMonomial":
        return YMonomial((((i, s), e),)) if e else YMonomial()

    @staticmethod
    def from_dict(d: dict) -> "YMonomial":
        return YMonomial(_freeze(d))

    def exps(self) -> dict:
        return dict(self.y)

    def __mul__(self, other: "YMonomial") -> "YMonomial":
        return YMonomial(_merge(self.y, other.y))

    def inverse(self) -> "YMonomial":
        return YMonomial(_scale(self.y, -1))

    def __pow__(self, n: int) -> "YMonomial":
        return YMonomial(_scale(self.y, n))

    @property
    def is_one(self) -> bool:
        return not self.y

    @property
    def is_dominant(self) -> bool:
        return all(e >= 0 for _, e in self.y)


@dataclass(frozen=True)
class CAMonomial:
    rank: int
    a: ExpItems = ()
    e_omega: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.e_omega:
            object.__setattr__(self, "e_omega", (0,) * self.rank)

    @staticmethod
    def one(rank: int) -> "CAMonomial":
        return CAMonomial(rank)

    @staticmethod
    def a_var(rank: int, i: int, s: int, e: int = 1) -> "CAMonomial":
        return CAMonomial(rank, (((i, s), e),) if e else ())

    @staticmethod
    def e_term(wv: WeightVector) -> "CAMonomial":
        return CAMonomial(len(wv.omega), (), wv.omega)

    @staticmethod
    def from_parts(rank: int, a_dict: dict, wv: WeightVector) -> "CAMonomial":
        return CAMonomial(rank, _freeze(a_dict), wv.omega)

    def a_exps(self) -> dict:
        return dict(self.a)

    @property
    def e_weight(self) -> WeightVector:
        return WeightVector(self.e_omega)

    @property
    def is_pure_e(self) -> bool:
        return not self.a

    @property
    def is_one(self) -> bool:
        return not self.a and all(x == 0 for x in self.e_omega)

    def __mul__(self, other: "CAMonomial") -> "CAMonomial":
        assert self.rank == other.rank
        return CAMonomial(self.rank, _merge(self.a, other.a),
                          tuple(x + y for x, y in zip(self.e_omega, other.e_omega)))

    def inverse(self) -> "CAMonomial":
        return CAMonomial(self.rank, _scale(self.a, -1),
                          tuple(-x for x in self.e_omega))

    def __pow__(self, n: int) -> "CAMonomial":
        return CAMonomial(self.rank, _scale(self.a, n),
                          tuple(n * x for x in self.e_omega))


@dataclass(frozen=True)
class LWeightMonomial:
    rank: int
    psi: ExpItems = ()
    prefactor: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.prefactor:
            object.__setattr__(self, "prefactor", (0,) * self.rank)

    @staticmethod
    def one(rank: int) -> "LWeightMonomial":
        return LWeightMonomial(rank)

    @staticmethod
    def psi_var(rank: int, i: int, s: int, e: int = 1) -> "LWeightMonomial":
        return LWeightMonomial(rank, (((i, s), e),) if e else ())

    @staticmethod
    def from_parts(rank: int, psi_dict: dict, wv: WeightVector) -> "LWeightMonomial":
        return LWeightMonomial(rank, _freeze(psi_dict), wv.omega)

    def psi_exps(self) -> dict:
        return dict(self.psi)

    @property
    def weight(self) -> WeightVector:
        return WeightVector(self.prefactor)

    @property
    def is_one(self) -> bool:
        return not self.psi and all(x == 0 for x in self.prefactor)

    def __mul__(self, other: "LWeightMonomial") -> "LWeightMonomial":
        assert self.rank == other.rank
        return LWeightMonomial(self.rank, _merge(self.psi, other.psi),
                               tuple(x + y for x, y in zip(self.prefactor, other.prefactor)))

    def inverse(self) -> "LWeightMonomial":
        return LWeightMonomial(self.rank, _scale(self.psi, -1),
                               tuple(-x for x in self.prefactor))

    def __pow__(self, n: int) -> "LWeightMonomial":
        return LWeightMonomial(self.rank, _scale(self.psi, n),
                               tuple(n * x for x in self.prefactor))


def wt_degree(datum: CartanDatum, m) -> WeightVector:
    """Lambda-degree of a monomial of any flavor.

    Y[i,s] counts omega_i, A[i,s] counts alpha_i plus the e-part, an l-weight
    contributes only its prefactor (wt(Psi) = 0).
    """
    if isinstance(m, YMonomial):
        wv = WeightVector.zero(datum.rank)
        for (i, _), e in m.y:
            wv = wv + e * datum.omega(i)
        return wv
    if isinstance(m, CAMonomial):
        wv = WeightVector(m.e_omega)
        for (i, _), e in m.a:
            wv = wv + e * datum.alpha(i)
        return wv
    if isinstance(m, LWeightMonomial):
        return WeightVector(m.prefactor)
    raise TypeError(f"no degree for {type(m).__name__}")


def a_pattern(datum: CartanDatum, i: int, s: int) -> dict:
    """Y-exponent pattern of A[i,s] as a dict."""
    di = datum.d(i)
    out = {(i, s - di): 1, (i, s + di): 1}
    for j in datum.nodes():
        if j == i:
            continue
        cji = datum.c(j, i)
        if cji == -1:
            offs = (0,)
        elif cji == -2:
            offs = (-1, 1)
        elif cji == -3:
            offs = (-2, 0, 2)
        else:
            continue
        for o in offs:
            out[(j, s + o)] = out.get((j, s + o), 0) - 1
    return out


def a_expand_to_y(datum: CartanDatum, ca: CAMonomial) -> YMonomial:
    if any(x != 0 for x in ca.e_omega):
        raise NotAnAMonomialError("expansion needs a pure A-monomial (no e-part)")
    out: dict = {}
    for (i, s), e in ca.a:
        for k, v in a_pattern(datum, i, s).items():
            out[k] = out.get(k, 0) + e * v
    return YMonomial.from_dict(out)


def y_ratio_to_a(datum: CartanDatum, m: YMonomial) -> CAMonomial:
    """Invert a_expand_to_y by greedy elimination at the lowest spectral shift.

    At the lowest shift t carrying a nonzero exponent, say at node i with
    exponent e, the only generator whose expansion reaches (i,t) without
    touching anything lower is A[i, t+d_i]; so its exponent is forced to be e.
    Subtracting re-adds only content at shifts strictly above t, and a valid
    factorization keeps every leg inside the input's shift window, which gives
    both termination and the failure test.
    """
    residual = m.exps()
    if not residual:
        return CAMonomial.one(datum.rank)
    max_shift = max(s for (_, s) in residual)
    out: dict = {}
    while residual:
        t = min(s for (_, s) in residual)
        nodes_at_t = sorted(i for (i, s) in residual if s == t)
        i = nodes_at_t[0]
        e = residual[(i, t)]
        s_a = t + datum.d(i)
        if s_a + datum.d(i) > max_shift:
            raise NotAnAMonomialError(
                f"not-an-A-monomial: residual exponent {e} at node {i}, shift {t}")
        out[(i, s_a)] = out.get((i, s_a), 0) + e
        for k, v in a_pattern(datum, i, s_a).items():
            residual[k] = residual.get(k, 0) + (-e) * v
            if residual[k] == 0:
                del residual[k]
    return CAMonomial(datum.rank, _freeze(out))


def embed_y_as_lweight(datum: CartanDatum, m: YMonomial) -> LWeightMonomial:
    """Y[i,s] -> q^{omega_i} Psi[i,s-d_i] Psi[i,s+d_i]^{-1}, multiplicatively."""
    psi: dict = {}
    wv = WeightVector.zero(datum.rank)
    for (i, s), e in m.y:
        di = datum.d(i)
        psi[(i, s - di)] = psi.get((i, s - di), 0) + e
        psi[(i, s + di)] = psi.get((i, s + di), 0) - e
        wv = wv + e * datum.omega(i)
    return LWeightMonomial.from_parts(datum.rank, psi, wv)


@dataclass
class SparsePoly:
    """Exact integer-coefficient polynomial over hashable monomials.

    Example::

        p = SparsePoly.from_terms([(YMonomial.var(1, 0), 1)])
        q = p * p + p
    """

    terms: dict

    @staticmethod
    def zero() -> "SparsePoly":
        return SparsePoly({})

    @staticmethod
    def one(unit_monomial) -> "SparsePoly":
        return SparsePoly({unit_monomial: 1})

    @staticmethod
    def from_terms(pairs: Iterable) -> "SparsePoly":
        out: dict = {}
        for m, c in pairs:
            if c:
                out[m] = out.get(m, 0) + c
                if out[m] == 0:
                    del out[m]
        return SparsePoly(out)

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, m) -> int:
        return self.terms.get(m, 0)

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
            if out[m] == 0:
                del out[m]
        return SparsePoly(out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
            if out[m] == 0:
                del out[m]
        return SparsePoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return SparsePoly.zero()
            return SparsePoly({m: other * c for m, c in self.terms.items()})
        if isinstance(other, SparsePoly):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = m1 * m2
                    out[m] = out.get(m, 0) + c1 * c2
                    if out[m] == 0:
                        del out[m]
            return SparsePoly(out)
        # bare monomial
        out = {}
        for m1, c1 in self.terms.items():
            out[m1 * other] = c1
        return SparsePoly(out)

    __rmul__ = __mul__

    def map_monomials(self, f: Callable) -> "SparsePoly":
        out: dict = {}
        for m, c in self.terms.items():
            fm = f(m)
            out[fm] = out.get(fm, 0) + c
            if out[fm] == 0:
                del out[fm]
        return SparsePoly(out)

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())


@dataclass
class GradedSeries:
    """Cone-graded truncation: terms of a CA-series up to a height cap.

    The invariant is strict: every stored degree must lie in the cone
    w(Lambda_-) named by `word`, with height at most `cap`. Multiplication
    re-truncates, which is exactly the ideal-adic arithmetic of the
    completion at finite precision.
    """

    datum: CartanDatum
    word: Word
    cap: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self._hcache: dict = {}

    def height_of(self, m: CAMonomial) -> int | None:
        wv = wt_degree(self.datum, m)
        key = wv.omega
        if key in self._hcache:
            return self._hcache[key]
        h = self.datum.cone_height(wv, self.word)
        self._hcache[key] = h
        return h

    @staticmethod
    def from_poly(datum: CartanDatum, word, cap: int, poly: SparsePoly) -> "GradedSeries":
        s = GradedSeries(datum, tuple(word), cap, {})
        for m, c in poly.items():
            h = s.height_of(m)
            if h is None:
                raise ConeError(
                    f"term degree {wt_degree(datum, m).omega} outside cone of word {tuple(word)}")
            if h <= cap:
                s.terms[m] = s.terms.get(m, 0) + c
                if s.terms[m] == 0:
                    del s.terms[m]
        return s

    @staticmethod
    def unit(datum: CartanDatum, word, cap: int) -> "GradedSeries":
        return GradedSeries(datum, tuple(word), cap, {CAMonomial.one(datum.rank): 1})

    def copy(self) -> "GradedSeries":
        return GradedSeries(self.datum, self.word, self.cap, dict(self.terms))

    def _compatible(self, other: "GradedSeries"):
        assert self.datum.label == other.datum.label
        assert self.word == other.word and self.cap == other.cap

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        self._compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
            if out[m] == 0:
                del out[m]
        return GradedSeries(self.datum, self.word, self.cap, out)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        self._compatible(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
            if out[m] == 0:
                del out[m]
        return GradedSeries(self.datum, self.word, self.cap, out)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        self._compatible(other)
        out = GradedSeries(self.datum, self.word, self.cap, {})
        out._hcache = self._hcache
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                h = out.height_of(m)
                if h is None:
                    raise ConeError("product term left the cone")
                if h > self.cap:
                    continue
                out.terms[m] = out.terms.get(m, 0) + c1 * c2
                if out.terms[m] == 0:
                    del out.terms[m]
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedSeries)
                and self.word == other.word and self.cap == other.cap
                and self.terms == other.terms)

    def degree_zero_terms(self) -> list:
        return [(m, c) for m, c in self.terms.items() if self.height_of(m) == 0]

    def subseries(self, keep: Callable) -> "GradedSeries":
        return GradedSeries(self.datum, self.word, self.cap,
                            {m: c for m, c in self.terms.items() if keep(m)})

    def retruncate(self, cap: int) -> "GradedSeries":
        # only shrinking is sound: terms above the old cap were already dropped
        assert cap <= self.cap
        out = GradedSeries(self.datum, self.word, cap, {})
        out._hcache = self._hcache
        for m, c in self.terms.items():
            if self.height_of(m) <= cap:
                out.terms[m] = c
        return out

    def fingerprint(self) -> tuple:
        return tuple(sorted((m.a, m.e_omega, c) for m, c in self.terms.items()))


def graded_divide(S: GradedSeries, a: GradedSeries) -> GradedSeries:
    """The unique c with c*a = S below the cap, by geometric inversion.

    The divisor must have a single degree-0 term with coefficient 1; writing
    a = u*(1 + tail) with tail of height >= 1, the inverse is the finite
    Neumann sum of tail powers (heights only add, so the sum stops at cap).
    """
    S._compatible(a)
    z = a.degree_zero_terms()
    if len(z) != 1 or z[0][1] != 1:
        raise NonUnitDivisorError(
            f"non-unit-leading-term: degree-0 part has {len(z)} term(s)"
            + (f" with coefficient {z[0][1]}" if len(z) == 1 else ""))
    u = z[0][0]
    u_inv_poly = GradedSeries(S.datum, S.word, S.cap, {u.inverse(): 1})
    au = a * u_inv_poly
    tail = au - GradedSeries.unit(S.datum, S.word, S.cap)
    inv = GradedSeries.unit(S.datum, S.word, S.cap)
    power = GradedSeries.unit(S.datum, S.word, S.cap)
    sign = 1
    for _ in range(S.cap):
        power = power * tail
        if not power.terms:
            break
        sign = -sign
        inv = inv + power if sign > 0 else inv - power
    return S * inv * u_inv_poly
