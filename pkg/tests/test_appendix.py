from fractions import Fraction

import pytest

from rootfiring.appendix import (dominant_vertices, dual_polytope_dominant_vertices, kappa_statistics,
                                 oshima_check, pair, parabolic_factors, polar_vertices_bruteforce,
                                 projection_dilation_max, sub_root_system, vertex_orbit)
from rootfiring.reference import (EXCEPTIONAL_MAX, RANK_TIMES_GAP, classical_dominant_vertices,
                                  classical_max, classical_orbit_reps, classical_rank_times_gap)
from rootfiring.rootsys import build

CLASSICAL = ([f"A{n}" for n in range(1, 7)] + [f"B{n}" for n in range(2, 7)]
             + [f"C{n}" for n in range(3, 7)] + [f"D{n}" for n in range(4, 7)])
SMALL = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]


def test_sub_root_system_examples():
    d4 = build("D4")
    assert sorted(f.label for f in parabolic_factors(d4, 1)) == ["A1", "A1", "A1"]
    b3 = build("B3")
    assert [f.label for f in parabolic_factors(b3, 0)] == ["B2"]
    assert [f.label for f in parabolic_factors(b3, 2)] == ["A2"]
    full = sub_root_system(b3, b3.simple_roots)
    assert len(full) == 1 and full[0].label == "B3" and len(full[0].roots) == 18
    assert [f.label for f in parabolic_factors(build("F4"), 0)] == ["C3"]
    assert sub_root_system(b3, []) == []


@pytest.mark.parametrize("label", SMALL + ["D4", "F4"])
def test_dual_vertices_are_feasible(label):
    s = build(label)
    for i in range(s.rank):
        factors = parabolic_factors(s, i)
        for v in dominant_vertices(s, factors):
            for f in factors:
                assert all(pair(s, v, b) <= 1 for b in f.roots)


@pytest.mark.parametrize("label", SMALL)
def test_polar_vertices_bruteforce(label):
    s = build(label)
    for i in range(s.rank):
        factors = parabolic_factors(s, i)
        assert polar_vertices_bruteforce(s, factors) == vertex_orbit(s, factors, dominant_vertices(s, factors))


@pytest.mark.parametrize("label", ["A4", "B4", "C4", "D4", "D5", "E6"])
def test_minuscule_nodes_qualify(label):
    """Nodes with highest-coroot coefficient 1 always give a vertex."""
    s = build(label)
    f = sub_root_system(s, s.simple_roots)[0]
    dv = dual_polytope_dominant_vertices(s, f)
    assert all(a >= 1 for a in dv.coefficients)
    assert len(dv.nodes) >= 1


@pytest.mark.parametrize("family,n", [(f, n) for f, lo in [("A", 1), ("B", 2), ("C", 3), ("D", 4)]
                                      for n in range(lo, 6)])
def test_full_dual_vertices_closed_form(family, n):
    s = build(f"{family}{n}")
    f = sub_root_system(s, s.simple_roots)[0]
    assert sorted(dual_polytope_dominant_vertices(s, f).vertices) == sorted(classical_dominant_vertices(family, n))


@pytest.mark.parametrize("label", CLASSICAL)
def test_classical_maxima(label):
    s = build(label)
    fam, n = label[0], int(label[1:])
    for i in range(n):
        assert projection_dilation_max(s, i).value == classical_max(fam, n, i + 1)
    kappa, gap = kappa_statistics(s)
    assert kappa < 2
    assert gap == classical_rank_times_gap(fam, n)


@pytest.mark.parametrize("label", sorted(EXCEPTIONAL_MAX))
def test_exceptional_maxima(label):
    s = build(label)
    assert [projection_dilation_max(s, i).value for i in range(s.rank)] == EXCEPTIONAL_MAX[label]
    assert kappa_statistics(s)[1] == RANK_TIMES_GAP[label]


def test_named_values():
    assert projection_dilation_max(build("B3"), 2).value == Fraction(4, 3)
    assert projection_dilation_max(build("E8"), 3).value == Fraction(59, 30)


@pytest.mark.parametrize("label", CLASSICAL)
def test_oshima_classical(label):
    s = build(label)
    fam, n = label[0], int(label[1:])
    for i in range(n):
        rep = oshima_check(s, i)
        assert rep.ok
        expected = classical_orbit_reps(fam, n, i + 1)
        if expected is not None:
            got = {(tuple(v), length) for (_, length), vs in rep.groups.items() for v in vs}
            assert got == expected


@pytest.mark.parametrize("label", ["G2", "F4", "E6", "E7", "E8"])
def test_oshima_exceptional(label):
    s = build(label)
    assert all(oshima_check(s, i).ok for i in range(s.rank))


def test_rank2_outside_groups():
    g2 = build("G2")
    rep = oshima_check(g2, 0)
    assert sum(len(v) for v in rep.groups.values()) == len(rep.groups)
