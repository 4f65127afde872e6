from math import comb

import pytest

from rootfiring.typea import (compositions_fitting, f_lambda, forest_counts_bruteforce,
                              lattice_points, partitions, typeA_count, typeA_direct, typeA_poly)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert sum(1 for _ in partitions(8)) == 22


@pytest.mark.parametrize("N", range(1, 7))
def test_f_lambda_bruteforce(N):
    counts = forest_counts_bruteforce(N)
    for lam in partitions(N):
        assert f_lambda(lam) == counts[lam], lam


def test_forest_total():
    # labeled forests on 4 vertices
    assert sum(f_lambda(lam) for lam in partitions(4)) == 38


def _conjugate(lam):
    return [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []


@pytest.mark.parametrize("N", range(1, 7))
def test_compositions_fitting(N):
    for lam in partitions(N):
        assert compositions_fitting(0, lam) == 1
        assert compositions_fitting(1, lam) == len(lam)
        conj = _conjugate(lam) + [0, 0]
        assert compositions_fitting(2, lam) == comb(conj[0], 2) + conj[1]


def test_lattice_points_small():
    assert sorted(lattice_points((1, 0))) == [(0, 1), (1, 0)]
    assert len(lattice_points((2, 1, 0))) == 7


@pytest.mark.parametrize("a", [(0, 0), (1, 0), (1, 1, 0), (2, 1, 0), (1, 0, 0, 0), (2, 0, 0),
                               (1, 1, 0, 0), (2, 1, 1, 0)])
def test_typeA_formula_matches_direct(a):
    for k in range(4):
        assert typeA_count(a, k) == typeA_direct(a, k)


@pytest.mark.parametrize("n", range(1, 5))
def test_first_fundamental(n):
    """For a = (1, 0, ..., 0) the quotient count of lam is its length."""
    a = (1,) + (0,) * n
    poly = typeA_poly(a)
    for d in range(n + 1):
        expected = sum(len(lam) * f_lambda(lam) for lam in partitions(n + 1) if n + 1 - len(lam) == d)
        assert poly.coeff(d, 0) == expected


def test_rejects_unsorted():
    with pytest.raises(ValueError):
        typeA_poly((0, 1))
