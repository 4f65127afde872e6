"""Discrete permutohedra, root order, and the quotient-counting formula.

The discrete permutohedron of a dominant weight lam is the set of weights
in the coset ``lam + Q`` that lie in the convex hull of the Weyl orbit of lam.
It is enumerated as the union of the orbits of the dominant weights below lam,
which only needs the root order (no convex hull code).

Point sets are stored as ``(N, n)`` int64 arrays of fundamental-weight
coordinates.  Geometry involving subspaces is done in simple-root
coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import DifferentCoset, InvariantViolation, NotDominant, ResourceLimit
from .exactla import SpanKey, enumerate_indep_sets, solve, span_key
from .poly import EhrhartPoly
from .rootsys import RootSystem, as_param

DEFAULT_BOX_LIMIT = 10**7


# root order --------------------------------------------------------------------

def root_order_leq(sys: RootSystem, mu, lam) -> bool:
    return sys.leq(mu, lam)


def meet(sys: RootSystem, lam, mu) -> tuple:
    """Coordinatewise minimum in root coordinates."""
    if not sys.same_coset(lam, mu):
        raise DifferentCoset(f"{lam} and {mu} lie in different cosets of Q")
    a, b = sys.root_coords(lam), sys.root_coords(mu)
    out = sys.weight_of([min(x, y) for x, y in zip(a, b)])
    out = tuple(int(x) for x in out)
    if sys.is_dominant(lam) and sys.is_dominant(mu) and not sys.is_dominant(out):
        raise InvariantViolation(f"meet of dominant weights {lam}, {mu} is not dominant")
    return out


def join_dominant(sys: RootSystem, weights) -> tuple:
    """Least dominant weight above every input (inputs in one coset of Q).

    Start from the coordinatewise maximum in root coordinates and add simple
    roots at negative pairings until dominant; every dominant upper bound
    lies above each intermediate vector, so the result is the least one.
    """
    weights = [tuple(w) for w in weights]
    first = weights[0]
    for w in weights[1:]:
        if not sys.same_coset(first, w):
            raise DifferentCoset(f"{first} and {w} lie in different cosets of Q")
    rc = [max(col) for col in zip(*(sys.root_coords(w) for w in weights))]
    u = [int(x) for x in sys.weight_of(rc)]
    while True:
        i = next((j for j, x in enumerate(u) if x < 0), None)
        if i is None:
            return tuple(u)
        u = [x + int(c) for x, c in zip(u, sys.cartan[i])]


# real points -------------------------------------------------------------------

def dominant_rational(sys: RootSystem, v) -> tuple:
    """Dominant representative of a rational vector given in root coordinates."""
    v = [Fraction(x) for x in v]
    a = list(sys.weight_of(v))
    C = sys.cartan
    for _ in range(10**6):
        i = next((j for j, x in enumerate(a) if x < 0), None)
        if i is None:
            return tuple(v)
        c = a[i]
        v[i] -= c
        a = [x - c * int(y) for x, y in zip(a, C[i])]
    raise InvariantViolation("reflection loop did not terminate")


def contains(sys: RootSystem, lam_dom, v) -> bool:
    """Is the root-coordinate vector v inside the real permutohedron of lam_dom?"""
    if not sys.is_dominant(lam_dom):
        raise NotDominant(f"{lam_dom} is not dominant")
    vd = dominant_rational(sys, v)
    return all(a - b >= 0 for a, b in zip(sys.root_coords(lam_dom), vd))


def inner_most(sys: RootSystem, v, key: SpanKey) -> tuple:
    """v minus its orthogonal projection onto the span, in root coordinates."""
    v = [Fraction(x) for x in v]
    if key.dim == 0:
        return tuple(v)
    G = [[Fraction(int(x)) for x in row] for row in sys.gram]
    B = [list(r) for r in key.rows]
    n = sys.rank
    BG = [[sum(b[k] * G[k][j] for k in range(n)) for j in range(n)] for b in B]
    M = [[sum(BG[i][k] * B[j][k] for k in range(n)) for j in range(len(B))] for i in range(len(B))]
    rhs = [sum(BG[i][k] * v[k] for k in range(n)) for i in range(len(B))]
    coef = solve(M, rhs)
    return tuple(v[k] - sum(c * b[k] for c, b in zip(coef, B)) for k in range(n))


# enumeration -------------------------------------------------------------------

@dataclass(frozen=True)
class DominantDownset:
    top: tuple
    members: tuple


def dominant_downset(sys: RootSystem, lam_dom, box_limit=DEFAULT_BOX_LIMIT) -> DominantDownset:
    """All dominant nu <= lam_dom, found by scanning the root-coordinate box."""
    lam_dom = tuple(int(x) for x in lam_dom)
    if not sys.is_dominant(lam_dom):
        raise NotDominant(f"{lam_dom} is not dominant")
    rc = sys.root_coords(lam_dom)
    bounds = [math.floor(x) for x in rc]
    size = math.prod(b + 1 for b in bounds)
    if size > box_limit:
        raise ResourceLimit(f"root-coordinate box of {size} points exceeds {box_limit}", size, box_limit)
    lam = np.array(lam_dom, dtype=np.int64)
    grid = np.stack(np.meshgrid(*[np.arange(b + 1) for b in bounds], indexing="ij"), -1)
    grid = grid.reshape(-1, sys.rank)
    pts = lam[None, :] - grid @ sys.cartan
    pts = pts[(pts >= 0).all(axis=1)]
    members = sorted(tuple(int(x) for x in p) for p in pts)
    return DominantDownset(lam_dom, tuple(members))


def _encode(pts: np.ndarray, bound: int) -> np.ndarray:
    radix = 2 * bound + 1
    n = pts.shape[1]
    if radix**n >= 2**62:
        raise ResourceLimit(f"coordinates up to {bound} in rank {n} overflow the point encoding")
    weights = radix ** np.arange(n, dtype=np.int64)
    return (pts + bound) @ weights


def orbit_closure(sys: RootSystem, dominant: np.ndarray) -> np.ndarray:
    """Union of the Weyl orbits of the given dominant weights (rows)."""
    dominant = np.unique(np.asarray(dominant, dtype=np.int64).reshape(-1, sys.rank), axis=0)
    if len(dominant) == 0:
        return dominant
    # |coordinates| in the orbit are bounded by the pairing with the highest coroot
    hc = np.array(max((r.coroot for r in sys.positive_roots), key=sum), dtype=np.int64)
    bound = int((dominant @ hc).max()) + 1
    seen = np.sort(_encode(dominant, bound))
    chunks = [dominant]
    frontier = dominant
    C = sys.cartan
    while len(frontier):
        imgs = []
        for i in range(sys.rank):
            sel = frontier[frontier[:, i] > 0]
            if len(sel):
                imgs.append(sel - sel[:, i:i + 1] * C[i][None, :])
        if not imgs:
            break
        imgs = np.unique(np.concatenate(imgs), axis=0)
        keys = _encode(imgs, bound)
        new = ~np.isin(keys, seen, assume_unique=False)
        frontier = imgs[new]
        if len(frontier):
            seen = np.union1d(seen, keys[new])
            chunks.append(frontier)
    out = np.concatenate(chunks)
    return out[np.lexsort(out.T[::-1])]


@dataclass(frozen=True)
class DiscretePermutohedron:
    lam: tuple
    points: np.ndarray

    def __len__(self):
        return len(self.points)

    def as_set(self) -> set:
        return {tuple(int(x) for x in p) for p in self.points}

    def __contains__(self, mu):
        return bool((self.points == np.asarray(mu)).all(axis=1).any())


def discrete_permutohedron(sys: RootSystem, lam_dom, box_limit=DEFAULT_BOX_LIMIT) -> DiscretePermutohedron:
    down = dominant_downset(sys, lam_dom, box_limit)
    pts = orbit_closure(sys, np.array(down.members, dtype=np.int64))
    return DiscretePermutohedron(tuple(lam_dom), pts)


def _scaled_root_coords(sys: RootSystem, pts: np.ndarray) -> np.ndarray:
    """Root coordinates times the index of connection (so they are integers)."""
    return np.asarray(pts, dtype=np.int64) @ sys._adj


def quotient_keys(sys: RootSystem, pts: np.ndarray, key: SpanKey) -> np.ndarray:
    """Integer-scaled quotient keys for a batch of weights."""
    R = _scaled_root_coords(sys, pts)
    if key.dim == 0:
        return R
    den = math.lcm(*(x.denominator for row in key.rows for x in row))
    rows = np.array([[int(x * den) for x in row] for row in key.rows], dtype=np.int64)
    out = R * den
    for row, p in zip(rows, key.pivots):
        out = out - (R[:, p:p + 1] * row[None, :])
    return out


def quot_count(sys: RootSystem, lam_dom, key: SpanKey, perm: DiscretePermutohedron = None) -> int:
    """Number of distinct cosets ``mu + span`` met by the discrete permutohedron."""
    if perm is None:
        perm = discrete_permutohedron(sys, lam_dom)
    return len(np.unique(quotient_keys(sys, perm.points, key), axis=0))


# span grouping -----------------------------------------------------------------

@dataclass(frozen=True)
class SpanGroup:
    """All independent sets with a common span, aggregated."""

    key: SpanKey
    root_ids: tuple  # positive roots inside the span
    zonotope: EhrhartPoly  # sum over the sets of rvol * k_l^#long * k_s^#short


@lru_cache(maxsize=None)
def span_groups(sys: RootSystem) -> tuple:
    groups = {}
    for X in enumerate_indep_sets(sys):
        term = EhrhartPoly({(X.long_count, X.short_count): X.rvol})
        groups[X.span] = groups.get(X.span, EhrhartPoly()) + term
    out = []
    for key, poly in groups.items():
        ids = tuple(a.index for a in sys.positive_roots if key.contains(a.root))
        out.append(SpanGroup(key, ids, poly))
    out.sort(key=lambda g: (g.key.dim, g.root_ids))
    return tuple(out)


def perm_count_poly(sys: RootSystem, lam_dom, box_limit=DEFAULT_BOX_LIMIT) -> EhrhartPoly:
    """Lattice-point count of Pi^Q(lam + rho_k) as a polynomial in k."""
    perm = discrete_permutohedron(sys, lam_dom, box_limit)
    total = EhrhartPoly()
    for g in span_groups(sys):
        total = total + quot_count(sys, lam_dom, g.key, perm) * g.zonotope
    return total


def perm_count_formula(sys: RootSystem, lam_dom, k, box_limit=DEFAULT_BOX_LIMIT) -> int:
    k = sys.check_param(k)
    return perm_count_poly(sys, lam_dom, box_limit)(k.k_long, k.k_short)


def perm_count_direct(sys: RootSystem, lam_dom, k, box_limit=DEFAULT_BOX_LIMIT) -> int:
    k = as_param(k)
    top = tuple(a + b for a, b in zip(lam_dom, sys.rho_k(k)))
    return len(discrete_permutohedron(sys, top, box_limit))


# slices ------------------------------------------------------------------------

def parabolic_spans(sys: RootSystem) -> list:
    n = sys.rank
    out = []
    for r in range(n + 1):
        for J in combinations(range(n), r):
            out.append(span_key([sys.simple_roots[j].root for j in J], n))
    return out


def slice_integrality_check(sys: RootSystem, lam_dom, key: SpanKey, sample=None) -> bool:
    """Compare real slice membership with lattice-point quotient keys.

    For each mu in the sample (default: every point of ``lam + Q`` in a box
    one unit larger than the permutohedron), the affine slice ``mu + span``
    meets the real permutohedron exactly when its inner-most point does, and
    this must agree with some lattice point of Pi^Q(lam) sharing mu's key.
    """
    perm = discrete_permutohedron(sys, lam_dom)
    keys = {tuple(r) for r in quotient_keys(sys, perm.points, key)}
    if sample is None:
        rc = _scaled_root_coords(sys, perm.points)
        f = sys.index_of_connection
        lo = rc.min(axis=0) // f - 1
        hi = -((-rc.max(axis=0)) // f) + 1
        base = np.array(sys.root_coords(lam_dom), dtype=object)
        frac = np.array([x - math.floor(x) for x in base], dtype=object)
        sample = []
        for off in np.ndindex(*(int(h - l + 1) for l, h in zip(lo, hi))):
            c = [Fraction(int(l + o)) + fr for l, o, fr in zip(lo, off, frac)]
            sample.append(tuple(int(x) for x in sys.weight_of(c)))
    for mu in sample:
        rcmu = sys.root_coords(mu)
        real = contains(sys, lam_dom, inner_most(sys, rcmu, key))
        lattice = tuple(quotient_keys(sys, np.array([mu]), key)[0]) in keys
        if real != lattice:
            return False
    return True
