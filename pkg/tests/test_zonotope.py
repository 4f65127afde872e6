import random

import pytest
from hypothesis import given, strategies as st

from rootfiring.errors import DimensionError
from rootfiring.poly import parse_poly
from rootfiring.zonotope import (evaluate_multi, minkowski_count, minkowski_poly,
                                 minkowski_poly_univariate, quotient_counts, stanley_poly)

THIN = [(0, 3), (1, 4), (2, 0)]


def test_thin_triangle():
    assert minkowski_poly_univariate(THIN, [(1, 1)]) == parse_poly("6k + 5")
    assert quotient_counts(THIN, [(1, 1)]) == (6, 4)
    for k in range(5):
        assert minkowski_count(THIN, [(1, 1)], [k]) == 6 * k + 5


def test_unit_square_plus_segments():
    sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
    terms = minkowski_poly(sq, [(1, 0), (0, 1)])
    for k1 in range(3):
        for k2 in range(3):
            assert evaluate_multi(terms, (k1, k2)) == (k1 + 2) * (k2 + 2)
            assert minkowski_count(sq, [(1, 0), (0, 1)], (k1, k2)) == (k1 + 2) * (k2 + 2)


def test_dimension_guard():
    with pytest.raises(DimensionError):
        minkowski_count([(0,) * 5], [], [])
    with pytest.raises(DimensionError):
        minkowski_count([(0, 0)], [(1, 0, 0)], [1])
    with pytest.raises(DimensionError):
        quotient_counts(THIN, [(1, 1), (2, 2)])


def test_polytope_alone():
    tri = [(0, 0), (3, 0), (0, 3)]
    assert minkowski_count(tri, [], []) == 10
    assert minkowski_poly(tri, []) == {(): 10}


def test_stanley_square():
    assert stanley_poly([(1, 0), (0, 1)]) == parse_poly("k^2 + 2k + 1")
    assert stanley_poly([(1, 1), (1, -1)]) == parse_poly("2k^2 + 2k + 1")


_vec = st.tuples(*[st.integers(-2, 2)] * 3).filter(any)


@given(st.lists(_vec, min_size=1, max_size=4), st.integers(0, 3))
def test_point_plus_zonotope_is_stanley(gens, k):
    direct = minkowski_count([(0, 0, 0)], gens, [k] * len(gens))
    assert direct == stanley_poly(gens)(k)
    assert direct == minkowski_poly_univariate([(0, 0, 0)], gens)(k)


@pytest.mark.parametrize("seed", range(5))
def test_formula_matches_direct_3d(seed):
    r = random.Random(seed)
    poly = [tuple(r.randint(0, 2) for _ in range(3)) for _ in range(4)]
    gens = [tuple(r.randint(-1, 2) for _ in range(3)) for _ in range(3)]
    gens = [g for g in gens if any(g)]
    terms = minkowski_poly(poly, gens)
    for k in range(4):
        assert evaluate_multi(terms, [k] * len(gens)) == minkowski_count(poly, gens, [k] * len(gens))


def test_k_zero_counts_polytope():
    poly = [(0, 0, 0), (2, 1, 0), (0, 2, 1), (1, 0, 2)]
    gens = [(1, 0, 0), (0, 1, 1)]
    assert evaluate_multi(minkowski_poly(poly, gens), (0, 0)) == minkowski_count(poly, [], [])
