"""Cartan data, Weyl group words, and graded cones for finite types.

Conventions fixed here and relied on everywhere else:

  * nodes are 1-based, numbered as in Bourbaki;
  * the Cartan matrix is stored row-convention, C[i][j] = 2(a_i,a_j)/(a_i,a_i),
    so that D*C is symmetric for D = diag(d_i) with d_i the minimal positive
    symmetrizers; the pairing <lambda, alpha_i-check> of a weight with a simple
    coroot is then just the i-th coordinate in the fundamental-weight basis;
  * the i-th simple root in the fundamental-weight basis is the i-th COLUMN
    of C;
  * a word [i_1, ..., i_r] names the group element s_{i_1}...s_{i_r}, and
    acting with it applies s_{i_r} first (rightmost first).

Weights are exact integer vectors in the fundamental-weight basis; root-basis
coordinates come from the integer adjugate of C and are exact Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedDatumError

Word = tuple[int, ...]

_DUAL_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n - 1,
    "C": lambda n: n + 1,
    "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
    "F": lambda n: 9,
    "G": lambda n: 4,
}


@dataclass(frozen=True)
class WeightVector:
    """Integer weight in the fundamental-weight basis."""

    omega: tuple[int, ...]

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a + b for a, b in zip(self.omega, other.omega)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(tuple(a - b for a, b in zip(self.omega, other.omega)))

    def __neg__(self) -> "WeightVector":
        return WeightVector(tuple(-a for a in self.omega))

    def __mul__(self, n: int) -> "WeightVector":
        return WeightVector(tuple(n * a for a in self.omega))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.omega)

    @staticmethod
    def zero(rank: int) -> "WeightVector":
        return WeightVector((0,) * rank)


def _det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def _adjugate(m: list[list[int]]) -> list[list[int]]:
    n = len(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * _det(minor)
    return adj


def _simple(rank: int, i: int) -> tuple[int, ...]:
    return tuple(1 if k == i - 1 else 0 for k in range(rank))


def _reflect_rc(c, rank: int, i: int, rc):
    row = c[i - 1]
    coef = sum(row[t] * rc[t] for t in range(rank))
    if coef == 0:
        return tuple(rc)
    out = list(rc)
    out[i - 1] -= coef
    return tuple(out)


def _positive_roots(c, rank: int) -> tuple[tuple[int, ...], ...]:
    """All positive roots in root coordinates (the W-orbit of the simples)."""
    simples = [_simple(rank, i) for i in range(1, rank + 1)]
    seen = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for root in frontier:
            for i in range(1, rank + 1):
                image = _reflect_rc(c, rank, i, root)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return tuple(sorted(r for r in seen if all(x >= 0 for x in r)))


def _longest_word(c, rank: int) -> Word:
    """Greedy descent on rho; letters are collected in application order, so
    the word (rightmost applied first) is their reverse."""
    v = [1] * rank
    letters: list[int] = []
    while True:
        for i in range(1, rank + 1):
            coef = v[i - 1]
            if coef > 0:
                letters.append(i)
                v = [v[k] - coef * c[k][i - 1] for k in range(rank)]
                break
        else:
            break
    return tuple(reversed(letters))


@dataclass(frozen=True)
class CartanDatum:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    sym: tuple[int, ...]
    dual_coxeter: int
    lacing: int
    pos_roots: tuple[tuple[int, ...], ...]
    longest_word: Word
    bar: tuple[int, ...]
    cartan_adjugate: tuple[tuple[int, ...], ...]
    cartan_det: int

    # -- basic accessors (1-based nodes) --

    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def c(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def d(self, i: int) -> int:
        return self.sym[i - 1]

    def bar_node(self, i: int) -> int:
        return self.bar[i - 1]

    def omega(self, i: int) -> WeightVector:
        return WeightVector(_simple(self.rank, i))

    def alpha(self, i: int) -> WeightVector:
        return WeightVector(tuple(self.cartan[k][i - 1] for k in range(self.rank)))

    def rho(self) -> WeightVector:
        return WeightVector((1,) * self.rank)

    # -- basis changes --

    def root_coords(self, wv: WeightVector) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis, exact."""
        n = self.rank
        return tuple(
            Fraction(sum(self.cartan_adjugate[k][t] * wv.omega[t] for t in range(n)),
                     self.cartan_det)
            for k in range(n)
        )

    def root_coords_int(self, wv: WeightVector) -> tuple[int, ...] | None:
        """Root-basis coordinates if the weight lies in the root lattice."""
        rc = self.root_coords(wv)
        if any(f.denominator != 1 for f in rc):
            return None
        return tuple(int(f) for f in rc)

    def weight_from_root(self, rc) -> WeightVector:
        n = self.rank
        return WeightVector(tuple(
            sum(self.cartan[k][t] * rc[t] for t in range(n)) for k in range(n)
        ))

    # -- reflection actions --

    def reflect(self, i: int, wv: WeightVector) -> WeightVector:
        coef = wv.omega[i - 1]
        if coef == 0:
            return wv
        return wv - coef * self.alpha(i)

    def act_word(self, word, wv: WeightVector) -> WeightVector:
        for i in reversed(word):
            wv = self.reflect(i, wv)
        return wv

    def reflect_root(self, i: int, rc: tuple) -> tuple:
        return _reflect_rc(self.cartan, self.rank, i, rc)

    def act_word_root(self, word, rc: tuple) -> tuple:
        for i in reversed(word):
            rc = self.reflect_root(i, rc)
        return tuple(rc)

    # -- word combinatorics --

    def length(self, word) -> int:
        neg = 0
        for root in self.pos_roots:
            image = self.act_word_root(word, root)
            if any(x < 0 for x in image):
                neg += 1
        return neg

    def reduce_word(self, word) -> Word:
        """Reduced word for the same element, by the exchange condition.

        Builds the element letter by letter; a letter that would shorten the
        product deletes its partner, found by tracking its root backwards
        through the current word.
        """
        red: list[int] = []
        for j in word:
            gamma = _simple(self.rank, j)
            image = self.act_word_root(red, gamma)
            if all(x >= 0 for x in image):
                red.append(j)
                continue
            probe = gamma
            for t in range(len(red) - 1, -1, -1):
                if probe == _simple(self.rank, red[t]):
                    del red[t]
                    break
                probe = self.reflect_root(red[t], probe)
            else:
                raise AssertionError("exchange condition failed; datum corrupt")
        return tuple(red)

    def same_element(self, w1, w2) -> bool:
        return all(
            self.act_word(w1, self.omega(i)) == self.act_word(w2, self.omega(i))
            for i in self.nodes()
        )

    # -- cones wL_- spanned by w(-alpha_i) --

    def cone_coords_root(self, rc: tuple, word) -> tuple[int, ...] | None:
        """Coordinates of a root-lattice vector in the cone basis w(-alpha_i),
        or None when any coordinate would be negative."""
        inv = self.act_word_root(tuple(reversed(word)), rc) if word else tuple(rc)
        coords = tuple(-x for x in inv)
        if any(x < 0 for x in coords):
            return None
        return coords

    def cone_coords(self, wv: WeightVector, word) -> tuple[int, ...] | None:
        rc = self.root_coords_int(wv)
        if rc is None:
            return None
        return self.cone_coords_root(rc, word)

    def cone_height(self, wv: WeightVector, word) -> int | None:
        coords = self.cone_coords(wv, word)
        if coords is None:
            return None
        return sum(coords)


def _chain_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _family_data(family: str, rank: int):
    if family == "A" and rank >= 1:
        return _chain_edges(rank), [1] * rank
    if family == "B" and rank >= 2:
        return _chain_edges(rank), [2] * (rank - 1) + [1]
    if family == "C" and rank >= 2:
        return _chain_edges(rank), [1] * (rank - 1) + [2]
    if family == "D" and rank >= 4:
        return _chain_edges(rank - 1) + [(rank - 2, rank)], [1] * rank
    if family == "E" and rank in (6, 7, 8):
        edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6)]
        edges += [(6, 7)] * (rank >= 7) + [(7, 8)] * (rank == 8)
        return edges, [1] * rank
    if family == "F" and rank == 4:
        return _chain_edges(4), [2, 2, 1, 1]
    if family == "G" and rank == 2:
        return [(1, 2)], [1, 3]
    raise UnsupportedDatumError(f"unsupported type {family}{rank}")


def _build_matrix(rank: int, edges, d) -> list[list[int]]:
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for (i, j) in edges:
        # for every finite-type edge (a_i,a_j) = -max(d_i,d_j); dividing by
        # the row's own d gives the familiar asymmetric pair like (-1,-2)
        num = -max(d[i - 1], d[j - 1])
        c[i - 1][j - 1] = num // d[i - 1]
        c[j - 1][i - 1] = num // d[j - 1]
    return c


@lru_cache(maxsize=None)
def build_cartan(family: str, rank: int) -> CartanDatum:
    family = family.upper()
    edges, d = _family_data(family, rank)
    c = _build_matrix(rank, edges, d)
    for i in range(rank):
        for j in range(rank):
            assert d[i] * c[i][j] == d[j] * c[j][i], "symmetrization failed"

    w0 = _longest_word(c, rank)
    bar = []
    for i in range(1, rank + 1):
        image = _simple(rank, i)
        for t in reversed(w0):
            image = _reflect_rc(c, rank, t, image)
        target = tuple(-x for x in image)
        matched = [j for j in range(1, rank + 1) if target == _simple(rank, j)]
        assert matched, "w0 does not permute the negative simples"
        bar.append(matched[0])

    lacing = max([1] + [-c[i][j] for i in range(rank) for j in range(rank) if i != j])
    return CartanDatum(
        label=f"{family}{rank}",
        rank=rank,
        cartan=tuple(tuple(row) for row in c),
        sym=tuple(d),
        dual_coxeter=_DUAL_COXETER[family](rank),
        lacing=lacing,
        pos_roots=_positive_roots(c, rank),
        longest_word=w0,
        bar=tuple(bar),
        cartan_adjugate=tuple(tuple(row) for row in _adjugate(c)),
        cartan_det=_det(c),
    )


def parse_type_label(label: str) -> CartanDatum:
    label = label.strip()
    if len(label) < 2 or not label[0].isalpha() or not label[1:].isdigit():
        raise UnsupportedDatumError(f"bad type label {label!r}")
    return build_cartan(label[0], int(label[1:]))
