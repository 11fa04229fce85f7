"""Projection, stabilized limits, factorizations, and product formulas."""

from __future__ import annotations

import random

import pytest

from qcharkit import (CAMonomial, GradedSeries, NoLimitError, SparsePoly,
                      YMonomial, build_cartan, const_flip,
                      factor_const_nonconst, geometric_series,
                      kr_highest_weight, product_window, project_piR,
                      projected_limit, series_agree_on_window,
                      shifted_const_formula, w0_product_formula, wt_degree)

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)
B2 = build_cartan("B", 2)


def random_ca_poly(rng: random.Random, datum) -> SparsePoly:
    terms: dict = {}
    for _ in range(rng.randint(1, 5)):
        a = {}
        for _ in range(rng.randint(0, 3)):
            key = (rng.choice(list(datum.nodes())), rng.randint(-5, 5))
            a[key] = a.get(key, 0) + rng.choice((-2, -1, 1))
        wv = sum((rng.randint(-2, 2) * datum.alpha(j) for j in datum.nodes()),
                 start=datum.weight_from_root((0,) * datum.rank))
        mono = CAMonomial.from_parts(datum.rank, {k: v for k, v in a.items() if v}, wv)
        terms[mono] = terms.get(mono, 0) + rng.randint(1, 3)
    return SparsePoly(terms)


def test_projection_is_a_degree_preserving_homomorphism():
    rng = random.Random(41)
    for _ in range(50):
        datum = rng.choice((A1, A2, B2))
        threshold = rng.randint(-6, 6)
        p, q = random_ca_poly(rng, datum), random_ca_poly(rng, datum)
        assert project_piR(datum, threshold, p * q) == \
            project_piR(datum, threshold, p) * project_piR(datum, threshold, q)
        for mono, _ in p.items():
            img = project_piR(datum, threshold, SparsePoly({mono: 1}))
            for out, _ in img.items():
                assert wt_degree(datum, out) == wt_degree(datum, mono)
        assert project_piR(datum, None, p) == p


def test_rank_one_reflection_limit_small_cap():
    rep = projected_limit(A1, (1,), 1, cap=4)
    assert rep.converged
    expected = GradedSeries.from_poly(
        A1, (1,), 4,
        SparsePoly({CAMonomial.e_term(n * A1.alpha(1)): 1 for n in range(5)}))
    assert rep.value == expected


def test_factorization_round_trip():
    rng = random.Random(42)
    for _ in range(20):
        cap = 5
        c = geometric_series(A2, (), cap,
                             [((-1, 0), 1)])
        chains = {CAMonomial.one(2): 1}
        for _ in range(rng.randint(0, 3)):
            mono = CAMonomial.a_var(2, rng.choice((1, 2)), rng.randint(4, 9), -1)
            chains[mono] = chains.get(mono, 0) + 1
        a = GradedSeries.from_poly(A2, (), cap, SparsePoly(chains))
        c2, a2 = factor_const_nonconst(c * a)
        assert c2 == c and a2 == a


def test_flip_is_an_involution_into_the_opposite_cone():
    c = shifted_const_formula(A2, (0, 1), 5)
    f = const_flip(c)
    assert tuple(f.word) == A2.longest_word
    back = const_flip(f)
    assert back.word == () and back.terms == c.terms
    for mono, coeff in c.terms.items():
        assert f.terms[CAMonomial.e_term(-mono.e_weight)] == coeff


def test_geometric_series_against_brute_force():
    cap = 6
    v = A1.alpha(1)
    s = geometric_series(A1, (1,), cap, [((1,), 2)])
    brute: dict = {}
    for n1 in range(cap + 1):
        for n2 in range(cap + 1 - n1):
            mono = CAMonomial.e_term((n1 + n2) * v)
            brute[mono] = brute.get(mono, 0) + 1
    assert s == GradedSeries.from_poly(A1, (1,), cap, SparsePoly(brute))


def test_longest_twist_formula_matches_sweep():
    rep = projected_limit(A1, A1.longest_word, 1, cap=5)
    assert rep.value == w0_product_formula(A1, 1, 5)
    rep2 = projected_limit(A2, A2.longest_word, 1, cap=4)
    assert rep2.value == w0_product_formula(A2, 1, 4)


def test_shifted_constant_of_antidominant_degree_is_unit():
    assert shifted_const_formula(A2, (-2, -1), 6) == GradedSeries.unit(A2, (), 6)
    assert shifted_const_formula(A1, (0,), 6) == GradedSeries.unit(A1, (), 6)


def test_limit_truncations_are_coherent():
    for datum, word, i in ((A1, (1,), 1), (A2, (1,), 1)):
        wide = projected_limit(datum, word, i, cap=8)
        narrow = projected_limit(datum, word, i, cap=4)
        assert wide.value.retruncate(4) == narrow.value


def test_no_limit_reports_carry_the_sweep_log():
    head = kr_highest_weight(A2, 1, 1)
    with pytest.raises(NoLimitError) as info:
        projected_limit(A2, (1,), 1, m=head, cap=6, k_max=2, min_k=2, window=3)
    assert info.value.sweep_log
    assert any("k sweep" in line for line in info.value.sweep_log)


def test_window_agreement_is_symmetric_and_detects_mismatch():
    a = geometric_series(A1, (1,), 6, [((1,), 1)])
    b = a.retruncate(3)
    ok_ab, _ = series_agree_on_window(a, b)
    ok_ba, _ = series_agree_on_window(b, a)
    assert ok_ab and ok_ba
    bad = GradedSeries(A1, (1,), 3, dict(b.terms))
    bad.terms[CAMonomial.e_term(A1.alpha(1))] = 7
    ok, msg = series_agree_on_window(a, bad)
    assert not ok and msg


def test_product_window_matches_series_multiplication():
    cap = 5
    s1 = geometric_series(A2, (), cap, [((-1, 0), 1)])
    s2 = geometric_series(A2, (), cap, [((0, -1), 1)])
    via_mul = s1 * s2
    wide1 = geometric_series(A2, (), 2 * cap, [((-1, 0), 1)])
    wide2 = geometric_series(A2, (), 2 * cap, [((0, -1), 1)])
    via_window = product_window(A2, (), cap, [dict(wide1.terms), dict(wide2.terms)])
    assert via_window == via_mul
