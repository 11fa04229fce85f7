"""Tower q-characters: closed forms, iterative expansion, normalizations."""

from __future__ import annotations

import random

import pytest

from qcharkit import (CAMonomial, SparsePoly, StepCapError, YMonomial,
                      build_cartan, fm_expand, kr_highest_weight,
                      kr_qchar_closed, kr_shape_of, usual_char_from_qchar,
                      w_normalized_qchar, wt_degree)

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)
B2 = build_cartan("B", 2)


def test_rank_one_fundamental_by_hand():
    qc = fm_expand(A1, YMonomial.var(1, -1))
    assert qc.poly == SparsePoly.from_terms([
        (YMonomial.var(1, -1), 1),
        (YMonomial.var(1, 1, -1), 1),
    ])


def test_dimension_oracles():
    for k in range(1, 9):
        assert fm_expand(A1, kr_highest_weight(A1, 1, k)).dimension() == k + 1
    for i in (1, 2):
        for k in range(1, 6):
            assert fm_expand(A2, kr_highest_weight(A2, i, k)).dimension() == \
                (k + 1) * (k + 2) // 2


def test_closed_form_matches_iterative_expansion():
    for k in range(1, 7):
        head = kr_highest_weight(A1, 1, k, base_shift=2)
        assert kr_qchar_closed(A1, 1, k, base_shift=2).poly == fm_expand(A1, head).poly
    for i in (1, 2):
        for k in range(1, 5):
            head = kr_highest_weight(A2, i, k)
            assert kr_qchar_closed(A2, i, k).poly == fm_expand(A2, head).poly


def test_tensor_product_of_adjacent_fundamentals():
    left = fm_expand(A2, YMonomial.var(1, -1)).poly * fm_expand(A2, YMonomial.var(2, 2)).poly
    joint = fm_expand(A2, YMonomial.from_dict({(1, -1): 1, (2, 2): 1})).poly
    assert left - joint == SparsePoly.from_terms([(YMonomial.one(), 1)])


def test_identity_normalization_is_negative_lattice():
    cases = [(A1, 1, k) for k in range(1, 5)] + [(A2, 1, k) for k in range(1, 4)]
    for datum, i, k in cases:
        qc = fm_expand(datum, kr_highest_weight(datum, i, k))
        norm = w_normalized_qchar(datum, qc, ())
        assert norm.coefficient(CAMonomial.one(datum.rank)) == 1
        for ca, _ in norm.items():
            assert ca.e_weight.is_zero
            assert ca.is_one or all(e < 0 for _, e in ca.a_exps().items())


def test_reflection_normalization_fixed_value():
    qc = kr_qchar_closed(A2, 1, 1, base_shift=1)
    norm = w_normalized_qchar(A2, qc, (1,))
    assert norm == SparsePoly.from_terms([
        (CAMonomial.a_var(2, 1, 1), 1),
        (CAMonomial.one(2), 1),
        (CAMonomial.a_var(2, 2, 2, -1), 1),
    ])


def test_usual_character_forgets_spectral_data():
    qc = fm_expand(A1, kr_highest_weight(A1, 1, 2))
    uc = usual_char_from_qchar(A1, qc)
    w = wt_degree(A1, qc.head)
    expected = SparsePoly.from_terms([
        (CAMonomial.e_term(w), 1),
        (CAMonomial.e_term(w - A1.alpha(1)), 1),
        (CAMonomial.e_term(w - A1.alpha(1) - A1.alpha(1)), 1),
    ])
    assert uc == expected


def test_string_shape_round_trip():
    rng = random.Random(35)
    for datum in (A1, A2, B2):
        for _ in range(40):
            i = rng.choice(list(datum.nodes()))
            k = rng.randint(1, 5)
            base = rng.randint(-4, 4)
            m = kr_highest_weight(datum, i, k, base)
            assert kr_shape_of(datum, m) == (i, k, base)
    assert kr_shape_of(A2, YMonomial.from_dict({(1, -1): 1, (2, 0): 1})) is None
    assert kr_shape_of(A2, YMonomial.from_dict({(1, -1): 2})) is None
    assert kr_shape_of(A2, YMonomial.from_dict({(1, -1): 1, (1, 3): 1})) is None
    assert kr_shape_of(A2, YMonomial.one()) is None


def test_expansion_step_cap():
    with pytest.raises(StepCapError):
        fm_expand(B2, kr_highest_weight(B2, 1, 3), step_cap=5)
