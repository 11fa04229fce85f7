"""Monomial flavors, sparse polynomials, and the graded completion."""

from __future__ import annotations

import random

import pytest

from qcharkit import (CAMonomial, ConeError, GradedSeries, LWeightMonomial,
                      NonUnitDivisorError, SparsePoly, WeightVector, YMonomial,
                      a_expand_to_y, a_pattern, build_cartan,
                      embed_y_as_lweight, graded_divide, wt_degree,
                      y_ratio_to_a)

A1 = build_cartan("A", 1)
A2 = build_cartan("A", 2)
B2 = build_cartan("B", 2)
G2 = build_cartan("G", 2)
ALL = [A1, A2, build_cartan("A", 3), B2, G2]


def random_y(rng: random.Random, datum) -> YMonomial:
    n = rng.randint(0, 4)
    d = {}
    for _ in range(n):
        key = (rng.choice(list(datum.nodes())), rng.randint(-6, 6))
        d[key] = d.get(key, 0) + rng.choice((-2, -1, 1, 2))
    return YMonomial.from_dict({k: v for k, v in d.items() if v})


def random_ca(rng: random.Random, datum) -> CAMonomial:
    n = rng.randint(0, 4)
    d = {}
    for _ in range(n):
        key = (rng.choice(list(datum.nodes())), rng.randint(-6, 6))
        d[key] = d.get(key, 0) + rng.choice((-2, -1, 1, 2))
    wv = WeightVector(tuple(rng.randint(-3, 3) for _ in range(datum.rank)))
    return CAMonomial.from_parts(datum.rank, {k: v for k, v in d.items() if v}, wv)


def test_monomial_group_laws():
    rng = random.Random(21)
    for datum in ALL:
        for _ in range(30):
            x, y = random_y(rng, datum), random_y(rng, datum)
            assert x * y == y * x
            assert (x * y) * x.inverse() == y
            assert (x ** 3) == x * x * x
            assert x * x.inverse() == YMonomial.one()


def test_a_pattern_fixed_values():
    assert a_pattern(A1, 1, 0) == {(1, -1): 1, (1, 1): 1}
    assert a_pattern(A2, 1, 0) == {(1, -1): 1, (1, 1): 1, (2, 0): -1}
    assert a_pattern(B2, 2, 0) == {(2, -1): 1, (2, 1): 1, (1, 0): -1}
    assert a_pattern(B2, 1, 0) == {(1, -2): 1, (1, 2): 1, (2, -1): -1, (2, 1): -1}


def test_a_pattern_weight_is_simple_root():
    for datum in ALL:
        for i in datum.nodes():
            for s in (-3, 0, 2):
                m = YMonomial.from_dict(a_pattern(datum, i, s))
                assert wt_degree(datum, m) == datum.alpha(i)


def test_a_expand_round_trip():
    rng = random.Random(22)
    for datum in ALL:
        for _ in range(40):
            n = rng.randint(0, 4)
            d = {}
            for _ in range(n):
                key = (rng.choice(list(datum.nodes())), rng.randint(-5, 5))
                d[key] = d.get(key, 0) + rng.choice((-2, -1, 1, 2))
            ca = CAMonomial.from_parts(datum.rank, {k: v for k, v in d.items() if v},
                                       WeightVector.zero(datum.rank))
            y = a_expand_to_y(datum, ca)
            assert y_ratio_to_a(datum, y) == ca
            assert wt_degree(datum, y) == wt_degree(datum, ca)


def test_embed_preserves_weight_and_is_multiplicative():
    rng = random.Random(23)
    for datum in ALL:
        for _ in range(30):
            x, y = random_y(rng, datum), random_y(rng, datum)
            ex, ey = embed_y_as_lweight(datum, x), embed_y_as_lweight(datum, y)
            assert embed_y_as_lweight(datum, x * y) == ex * ey
            assert wt_degree(datum, ex) == wt_degree(datum, x)
    assert embed_y_as_lweight(A2, YMonomial.var(1, 3)) == LWeightMonomial.from_parts(
        2, {(1, 2): 1, (1, 4): -1}, A2.omega(1))


def test_sparse_poly_ring_laws():
    rng = random.Random(24)
    for _ in range(25):
        def rand_poly():
            return SparsePoly.from_terms(
                [(random_ca(rng, A2), rng.randint(-3, 3)) for _ in range(rng.randint(0, 4))])
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert (p + q) * r == p * r + q * r
        assert p * q == q * p
        assert p - p == SparsePoly.zero()
        one = SparsePoly.one(CAMonomial.one(2))
        assert p * one == p


def test_graded_series_strict_cone_and_caps():
    s = GradedSeries.from_poly(A2, (), 4, SparsePoly.from_terms(
        [(CAMonomial.e_term(-n * A2.alpha(1)), 1) for n in range(9)]))
    assert len(s.terms) == 5
    with pytest.raises(ConeError):
        GradedSeries.from_poly(A2, (), 4, SparsePoly.one(
            CAMonomial.e_term(A2.alpha(1))))
    shrunk = s.retruncate(2)
    assert len(shrunk.terms) == 3


def test_series_multiplication_respects_truncation_ideal():
    rng = random.Random(25)
    for _ in range(15):
        def rand_series(cap):
            terms = {CAMonomial.one(1): 1}
            for _ in range(rng.randint(1, 5)):
                n = rng.randint(1, cap)
                m = CAMonomial.e_term(-n * A1.alpha(1))
                terms[m] = terms.get(m, 0) + rng.randint(-2, 2)
            return GradedSeries.from_poly(A1, (), cap, SparsePoly.from_terms(terms.items()))
        a8, b8 = rand_series(8), rand_series(8)
        p8 = a8 * b8
        p4 = a8.retruncate(4) * b8.retruncate(4)
        assert p8.retruncate(4) == p4


def test_graded_divide_inverts_products():
    rng = random.Random(26)
    for _ in range(20):
        def rand_unit(cap):
            terms = {CAMonomial.one(2): 1}
            for _ in range(rng.randint(0, 4)):
                n, m = rng.randint(0, 3), rng.randint(0, 3)
                if n + m == 0:
                    continue
                mono = CAMonomial.e_term(-(n * A2.alpha(1) + m * A2.alpha(2)))
                terms[mono] = terms.get(mono, 0) + rng.randint(1, 2)
            return GradedSeries.from_poly(A2, (), cap, SparsePoly.from_terms(terms.items()))
        a, b = rand_unit(6), rand_unit(6)
        assert graded_divide(a * b, a) == b
    bad = GradedSeries.from_poly(A2, (), 6, SparsePoly.from_terms(
        [(CAMonomial.one(2), 2)]))
    with pytest.raises(NonUnitDivisorError):
        graded_divide(bad, bad)


def test_wt_degree_additive_under_mul():
    rng = random.Random(27)
    for datum in ALL:
        for _ in range(20):
            x, y = random_ca(rng, datum), random_ca(rng, datum)
            assert wt_degree(datum, x * y) == wt_degree(datum, x) + wt_degree(datum, y)
