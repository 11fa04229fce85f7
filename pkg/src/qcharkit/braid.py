"""Braid group actions on Y-monomials and on l-weights.

Both actions are multiplicative, so they are defined on generators and
extended by exponent linearity. The two formulas look alike but select
neighbors by opposite Cartan entries: the Y-action reads C[j][i] (column i)
while the l-weight action reads C[i][j] (row i). Inverses are implemented
from their own explicit formulas rather than by formal inversion, so the
identity T_i T_i^{-1} = id is a checkable theorem here.

A word acts rightmost-first: braid_act_word([i1,...,ir], dir, x) applies
T_{ir} to x first.
"""

from __future__ import annotations

from .cartan import CartanDatum, WeightVector
from .rings import LWeightMonomial, SparsePoly, YMonomial


def _offsets_y(cji: int, di: int, direction: int) -> tuple[int, ...]:
    if cji == -1:
        offs = (di,)
    elif cji == -2:
        offs = (1, 3)
    elif cji == -3:
        offs = (1, 3, 5)
    else:
        return ()
    if direction == 1:
        return offs
    return tuple(-o for o in offs)


def braid_act_y(datum: CartanDatum, i: int, direction: int, m: YMonomial) -> YMonomial:
    out: dict = {}

    def add(key, v):
        out[key] = out.get(key, 0) + v

    two_di = 2 * datum.d(i) * direction
    for (j, s), e in m.y:
        if j != i:
            add((j, s), e)
            continue
        add((i, s + two_di), -e)
        for t in datum.nodes():
            if t == i:
                continue
            for o in _offsets_y(datum.c(t, i), datum.d(i), direction):
                add((t, s + o), e)
    return YMonomial.from_dict(out)


def _offsets_psi(cij: int, di: int, direction: int) -> tuple[int, ...]:
    if cij == -1:
        offs = (di,)
    elif cij == -2:
        offs = (0, 2)
    elif cij == -3:
        offs = (-1, 1, 3)
    else:
        return ()
    if direction == 1:
        return offs
    if cij == -1:
        return (-di,)
    if cij == -2:
        return (0, -2)
    return (1, -1, -3)


def braid_act_lweight(datum: CartanDatum, i: int, direction: int,
                      psi: LWeightMonomial) -> LWeightMonomial:
    out: dict = {}

    def add(key, v):
        out[key] = out.get(key, 0) + v

    two_di = 2 * datum.d(i) * direction
    for (j, s), e in psi.psi:
        if j != i:
            add((j, s), e)
            continue
        add((i, s + two_di), -e)
        for t in datum.nodes():
            if t == i:
                continue
            for o in _offsets_psi(datum.c(i, t), datum.d(i), direction):
                add((t, s + o), e)
    prefactor = datum.reflect(i, WeightVector(psi.prefactor))
    return LWeightMonomial.from_parts(datum.rank, out, prefactor)


def braid_act(datum: CartanDatum, i: int, direction: int, x):
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    if isinstance(x, YMonomial):
        return braid_act_y(datum, i, direction, x)
    if isinstance(x, LWeightMonomial):
        return braid_act_lweight(datum, i, direction, x)
    if isinstance(x, SparsePoly):
        return x.map_monomials(lambda m: braid_act(datum, i, direction, m))
    raise TypeError(f"braid action undefined on {type(x).__name__}")


def braid_act_word(datum: CartanDatum, word, direction: int, x):
    for i in reversed(tuple(word)):
        x = braid_act(datum, i, direction, x)
    return x
