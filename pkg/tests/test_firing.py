import itertools
import random

import numpy as np
import pytest

from rootfiring.errors import StepLimit, UnmatchedStablePoint
from rootfiring.firing import (FiringMode, fiber_table, fireable_roots, is_stable, sample_grid,
                               simulated_poly, simulated_polys, stabilize, stabilize_many,
                               stable_label, stable_points_check)
from rootfiring.permutohedra import discrete_permutohedron
from rootfiring.poly import parse_poly
from rootfiring.rootsys import build

from conftest import RANK2, small_dominant

SYM, TR = FiringMode.SYMMETRIC, FiringMode.TRUNCATED


def test_mode_parse():
    assert FiringMode.parse("sym") is SYM
    assert FiringMode.parse("Truncated") is TR
    with pytest.raises(ValueError):
        FiringMode.parse("other")


def test_fireable_examples():
    a1 = build("A1")
    assert fireable_roots(a1, (0,), 0, TR) == []
    assert fireable_roots(a1, (-2,), 0, SYM) == []
    assert [r.root for r in fireable_roots(a1, (0,), 1, SYM)] == [(1,)]
    # with k = 0 the truncated interval is empty, so everything is stable
    s = build("B2")
    assert all(is_stable(s, mu, 0, TR) for mu in itertools.product(range(-3, 4), repeat=2))


def test_stabilize_examples():
    a1 = build("A1")
    assert stabilize(a1, (5,), 1, SYM) == (5,)
    assert stabilize(a1, (0,), 1, SYM) == (2,) == a1.eta((1,), 1)
    assert stable_label(a1, (2,), 1) == (1,)
    with pytest.raises(StepLimit):
        stabilize(build("A3"), (-6, 0, 0), 2, SYM, step_limit=1)


@pytest.mark.parametrize("label", RANK2)
@pytest.mark.parametrize("mode", [SYM, TR])
def test_confluence_sample(label, mode):
    s = build(label)
    r = random.Random(label + mode.value)
    for _ in range(15):
        mu = tuple(r.randint(-5, 5) for _ in range(s.rank))
        k = (r.randint(1, 2), r.randint(1, 2))
        canonical = stabilize(s, mu, k, mode)
        for _ in range(5):
            assert stabilize(s, mu, k, mode, rng=r) == canonical


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_stabilize_many_matches_single(label):
    s = build(label)
    r = random.Random(7)
    pts = np.array([[r.randint(-6, 6) for _ in range(s.rank)] for _ in range(60)])
    for mode in (SYM, TR):
        many = stabilize_many(s, pts, (2, 1), mode)
        for p, q in zip(pts, many):
            assert tuple(int(x) for x in q) == stabilize(s, tuple(int(x) for x in p), (2, 1), mode)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3"])
def test_stable_points(label):
    """eta_k(nu) is stable iff nu is admissible, and stable points invert to their label."""
    s = build(label)
    for nu in itertools.product(range(-3, 4), repeat=s.rank):
        for k in [(1, 1), (2, 1)]:
            for mode in (SYM, TR):
                assert stable_points_check(s, nu, k, mode)
        assert s.eta(nu, 0) == nu
        assert is_stable(s, nu, 0, TR)
        assert stable_label(s, s.eta(nu, (1, 2)), (1, 2)) == nu


def test_stable_label_rejects_non_stable():
    a2 = build("A2")
    with pytest.raises(UnmatchedStablePoint):
        stable_label(a2, (0, 0), 1)


def test_fiber_table_examples():
    a1 = build("A1")
    t = fiber_table(a1, (0,), 1, SYM)
    assert t[(0,)] == 2 and t.n_sources == 2
    s = build("B2")
    t0 = fiber_table(s, (1, 1), (0, 0), TR)
    assert all(c == 1 for c in t0.counts.values())
    assert t0.n_sources == len(t0.counts)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3"])
@pytest.mark.parametrize("mode", [SYM, TR])
def test_fiber_partition(label, mode):
    """Fiber sizes add up to the number of sources (every source gets a label)."""
    s = build(label)
    for lam in small_dominant(s, 1):
        for k in [(1, 1), (2, 1)]:
            t = fiber_table(s, lam, k, mode)
            assert sum(t.counts.values()) == t.n_sources


def test_simulated_examples():
    assert simulated_poly(build("A1"), (0,), SYM) == parse_poly("k + 1")
    assert simulated_poly(build("G2"), (1, 0), TR) == parse_poly("4k_l + 2k_s + 1")
    b3 = build("B3")
    assert simulated_poly(b3, (0, 1, 0), SYM).format_diagonal() == "36k^2 + 48k + 12"
    with pytest.raises(ValueError):
        simulated_polys(build("A2"), (1, 0), SYM, [(1, 1)])


def test_sample_grid_sizes():
    fit, check = sample_grid(build("B3"))
    assert len(fit) == 10 and len(set(fit)) == 10
    assert all(ks >= 1 for _, ks in fit)
    fit, check = sample_grid(build("A3"))
    assert fit == [(k, k) for k in range(4)] and check == [(4, 4)]


def _minimal_coset_images(s, lam):
    """w lam for w in W^{I01}: orbit elements whose w_mu keeps the I01 simple roots positive."""
    I = s.i01_set(lam)
    out = []
    for mu in s.weyl_orbit(lam):
        _, word = s.dominant_rep(mu)
        if all(min(s.root_coords(s.apply_word(word, s.simple_roots[i].weight))) >= 0 for i in I):
            out.append(mu)
    return out


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "B3"])
def test_weyl_symmetry_of_sym_fibers(label):
    s = build(label)
    for lam in small_dominant(s, 1):
        images = _minimal_coset_images(s, lam)
        for k in [(1, 1), (2, 1)]:
            t = fiber_table(s, lam, k, SYM)
            assert len({t[mu] for mu in images}) == 1


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_fiber_set_identity(label):
    """Union of the fibers over W^{I01} lam is Pi(lam + rho_k) minus the lower permutohedra."""
    s = build(label)
    for lam in small_dominant(s):
        images = set(_minimal_coset_images(s, lam))
        lower = [mu for mu in small_dominant(s, 4) if mu != lam and s.leq(mu, lam)]
        for k in [1, 2]:
            rk = s.rho_k(k)
            top = tuple(a + b for a, b in zip(lam, rk))
            pts = discrete_permutohedron(s, top).points
            labels = [stable_label(s, tuple(int(x) for x in q), k) for q in stabilize_many(s, pts, k, SYM)]
            lhs = {tuple(int(x) for x in p) for p, nu in zip(pts, labels) if nu in images}
            rhs = {tuple(int(x) for x in p) for p in pts}
            for mu in lower:
                rhs -= discrete_permutohedron(s, tuple(a + b for a, b in zip(mu, rk))).as_set()
            assert lhs == rhs


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_sym_equals_sum_of_tr(label):
    """L^sym_lam = sum of L^tr_mu over mu in w_lam W_I (lam_dom)."""
    s = build(label)
    for top in small_dominant(s, 1):
        for k in [(1, 1), (2, 1)]:
            sym = fiber_table(s, top, k, SYM)
            tr = fiber_table(s, top, k, TR)
            for lam in sym.counts:
                dom, word = s.dominant_rep(lam)
                orbit = {s.apply_word(word, mu) for mu in s.weyl_orbit(dom, sorted(s.i01_set(dom)))}
                assert sym[lam] == sum(tr[mu] for mu in orbit)
