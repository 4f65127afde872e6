import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootfiring.errors import DependentSet, DimensionError, ResourceLimit
from rootfiring.exactla import (det_int, enumerate_indep_sets, fourier_motzkin_project,
                                hull_hrep, lattice_basis, matrix_rank, nullspace_int,
                                positive_roots_in_span, quotient_key, rref, rvol, satisfies,
                                solve, span_key)
from rootfiring.rootsys import build

int_vec = st.lists(st.integers(-4, 4), min_size=3, max_size=3)


def test_rvol_examples():
    assert rvol([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1
    g2 = build("G2")
    assert rvol([(3, 1), (0, 1)]) == 3
    assert rvol([g2.root_by_coords((3, 1)), g2.root_by_coords((0, 1))]) == 3
    assert rvol([]) == 1
    with pytest.raises(DependentSet):
        rvol([(1, 2), (2, 4)])


@pytest.mark.parametrize("label", ["A2", "A3", "A4"])
def test_type_a_totally_unimodular(label):
    s = build(label)
    assert all(X.rvol == 1 for X in enumerate_indep_sets(s))


def _half_open_count(X):
    """Lattice points of sum [0, x) by enumerating a bounding box in the span."""
    X = [tuple(v) for v in X]
    n = len(X[0])
    r = len(X)
    lo = [sum(min(0, v[i]) for v in X) for i in range(n)]
    hi = [sum(max(0, v[i]) for v in X) for i in range(n)]
    # pick r coordinates where X is invertible
    cols = next(c for c in itertools.combinations(range(n), r)
                if det_int([[v[j] for j in c] for v in X]) != 0)
    count = 0
    for p in itertools.product(*[range(lo[i], hi[i] + 1) for i in range(n)]):
        coef = solve([[X[j][c] for j in range(r)] for c in cols], [p[c] for c in cols])
        recon = [sum(coef[j] * X[j][i] for j in range(r)) for i in range(n)]
        if recon == list(p) and all(0 <= t < 1 for t in coef):
            count += 1
    return count


@pytest.mark.parametrize("label", ["B2", "G2", "B3", "C3"])
def test_rvol_counts_half_open_parallelepiped(label):
    s = build(label)
    seen = 0
    for X in enumerate_indep_sets(s):
        if X.rank == 0:
            continue
        vecs = [s.positive_roots[i].root for i in X.root_ids]
        assert _half_open_count(vecs) == X.rvol
        seen += 1
        if seen > 60:
            break


@given(st.lists(int_vec, min_size=1, max_size=3), st.randoms())
def test_span_key_order_insensitive(vectors, rnd):
    shuffled = list(vectors)
    rnd.shuffle(shuffled)
    assert span_key(vectors, 3) == span_key(shuffled, 3)


@given(st.lists(int_vec, min_size=1, max_size=2), int_vec,
       st.lists(st.fractions(-3, 3, max_denominator=5), min_size=2, max_size=2))
def test_quotient_key_invariant_under_span(vectors, mu, coefs):
    key = span_key(vectors, 3)
    shifted = [Fraction(m) + sum(c * v[i] for c, v in zip(coefs, vectors)) for i, m in enumerate(mu)]
    assert quotient_key(mu, key) == quotient_key(shifted, key)


def test_quotient_key_examples():
    full = span_key([(1, 0), (0, 1)])
    assert quotient_key((3, -7), full) == (0, 0)
    empty = span_key([], 2)
    assert quotient_key((3, -7), empty) == (3, -7)
    a1 = span_key([(1, 0)])
    assert quotient_key((1, 0), a1) == quotient_key((0, 0), a1)
    assert quotient_key((0, 1), a1) != quotient_key((0, 0), a1)


def test_span_examples():
    b3 = build("B3")
    assert positive_roots_in_span(b3, span_key([], 3)) == []
    b2 = build("B2")
    inside = positive_roots_in_span(b2, span_key([b2.simple_roots[0]]))
    assert [r.root for r in inside] == [(1, 0)]
    g2 = build("G2")
    assert len(positive_roots_in_span(g2, span_key(g2.simple_roots))) == 6


def _naive_indep_count(vectors, r):
    total = 0
    for j in range(r + 1):
        for X in itertools.combinations(vectors, j):
            if j == 0 or np.linalg.matrix_rank(np.array(X, dtype=float)) == j:
                total += 1
    return total


@pytest.mark.parametrize("label,count", [("A1", 2), ("A2", 7), ("B2", 11), ("G2", 22),
                                         ("A3", None), ("B3", 114), ("C3", None)])
def test_indep_set_counts(label, count):
    s = build(label)
    sets = list(enumerate_indep_sets(s))
    naive = _naive_indep_count([r.root for r in s.positive_roots], s.rank)
    assert len(sets) == naive
    if count is not None:
        assert len(sets) == count
    for X in sets:
        assert X.rank == len(X.root_ids)
        assert X.long_count + X.short_count == X.rank
        assert X.rvol == rvol([s.positive_roots[i].root for i in X.root_ids])


def test_indep_set_guard():
    with pytest.raises(ResourceLimit):
        list(enumerate_indep_sets(build("E8")))
    with pytest.raises(ResourceLimit):
        list(enumerate_indep_sets(build("B4"), limit=100))


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_float(M):
    assert det_int(M) == round(np.linalg.det(np.array(M, dtype=float)))


@given(st.lists(int_vec, min_size=1, max_size=4))
def test_rank_and_nullspace(rows):
    r = matrix_rank(rows)
    assert r == np.linalg.matrix_rank(np.array(rows, dtype=float))
    ns = nullspace_int(rows, 3)
    assert len(ns) == 3 - r
    for v in ns:
        assert all(isinstance(x, int) for x in v)
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)


def test_rref_leading_ones():
    rows, piv = rref([(2, 4, 6), (1, 1, 1)])
    assert piv == (0, 1) or list(piv) == [0, 1]
    for row, p in zip(rows, piv):
        assert row[p] == 1


@given(st.lists(int_vec, min_size=1, max_size=4))
def test_lattice_basis_generates_same_lattice(gens):
    B = lattice_basis(gens)
    if not any(any(g) for g in gens):
        assert B == []
        return
    assert matrix_rank(B) == len(B) == matrix_rank(gens)
    # every generator is an integer combination of the basis
    for g in gens:
        cols = next(c for c in itertools.combinations(range(3), len(B))
                    if det_int([[b[j] for j in c] for b in B]) != 0)
        coef = solve([[B[j][c] for j in range(len(B))] for c in cols], [g[c] for c in cols])
        assert all(x.denominator == 1 for x in coef)


def test_fourier_motzkin_square():
    square = [((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)]
    ineqs, eqs = fourier_motzkin_project(square, [1])
    assert sorted(ineqs) == [((-1,), 0), ((1,), 1)]
    assert eqs == []
    with pytest.raises(DimensionError):
        fourier_motzkin_project(square, [2])


def test_fourier_motzkin_triangle_projection():
    # x, y >= 0, x + y <= 2, projected to y
    tri = [((-1, 0), 0), ((0, -1), 0), ((1, 1), 2)]
    ineqs, _ = fourier_motzkin_project(tri, [0])
    assert sorted(ineqs) == [((-1,), 0), ((1,), 2)]


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5))
def test_hull_hrep_contains_points(points):
    ineqs, eqs = hull_hrep(points)
    for p in points:
        assert satisfies(p, ineqs, eqs)
    centroid = [Fraction(sum(p[i] for p in points), len(points)) for i in range(2)]
    assert satisfies(centroid, ineqs, eqs)
    far = (10, 10)
    assert not satisfies(far, ineqs, eqs)


def test_solve_exact():
    x = solve([[2, 1], [1, 3]], [1, 2])
    assert x == [Fraction(1, 5), Fraction(3, 5)]
    with pytest.raises(DependentSet):
        solve([[1, 2], [2, 4]], [0, 0])
