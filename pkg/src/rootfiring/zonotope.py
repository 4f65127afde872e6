"""Lattice points of a lattice polytope plus a dilated zonotope.

``minkowski_count`` enumerates lattice points of ``P + sum k_i [0, v_i]``
directly, using an H-representation obtained by Fourier-Motzkin elimination.
``minkowski_poly`` evaluates the quotient formula

    sum over independent X of  #(quot_X(P) & quot_X(Z^d)) * rvol(X) * prod k_i,

where quot_X is projection along the span of X.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .errors import DimensionError, ResourceLimit
from .exactla import (fourier_motzkin_project, lattice_basis, matrix_rank,
                      nullspace_int, rvol, solve)
from .poly import EhrhartPoly

MAX_DIM = 4
DEFAULT_BOX_LIMIT = 10**7


def _check(polytope, gens):
    polytope = [tuple(int(x) for x in p) for p in polytope]
    gens = [tuple(int(x) for x in g) for g in gens]
    if not polytope:
        raise DimensionError("polytope needs at least one vertex")
    d = len(polytope[0])
    if any(len(p) != d for p in polytope) or any(len(g) != d for g in gens):
        raise DimensionError("inconsistent dimensions")
    if d > MAX_DIM:
        raise DimensionError(f"dimension {d} exceeds {MAX_DIM}")
    return polytope, gens, d


def minkowski_hrep(polytope, gens, kvec):
    """``(ineqs, eqs)`` describing ``conv(polytope) + sum k_i [0, gens_i]``."""
    polytope, gens, d = _check(polytope, gens)
    m, g = len(polytope), len(gens)
    nv = d + m + g  # x, convex weights, segment parameters
    eqs = []
    for i in range(d):
        a = [0] * nv
        a[i] = 1
        for j, p in enumerate(polytope):
            a[d + j] = -p[i]
        for j, v in enumerate(gens):
            a[d + m + j] = -v[i]
        eqs.append((tuple(a), 0))
    eqs.append((tuple([0] * d + [1] * m + [0] * g), 1))
    ineqs = []
    for j in range(m + g):
        a = [0] * nv
        a[d + j] = -1
        ineqs.append((tuple(a), 0))
    for j, k in enumerate(kvec):
        a = [0] * nv
        a[d + m + j] = 1
        ineqs.append((tuple(a), k))
    return fourier_motzkin_project(ineqs, range(d, nv), eqs)


def _box_points(lo, hi, limit):
    size = math.prod(int(h - l + 1) for l, h in zip(lo, hi))
    if size > limit:
        raise ResourceLimit(f"bounding box of {size} points exceeds {limit}", size, limit)
    axes = [np.arange(int(l), int(h) + 1) for l, h in zip(lo, hi)]
    return np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, len(axes))


def _inside(pts: np.ndarray, ineqs, eqs) -> np.ndarray:
    """Vectorized membership; rows are primitive integer after FM normalization."""
    keep = np.ones(len(pts), dtype=bool)
    for a, b in ineqs:
        keep &= pts @ np.array(a, dtype=np.int64) <= math.floor(b)
    for a, b in eqs:
        if Fraction(b).denominator != 1:
            return np.zeros(len(pts), dtype=bool)
        keep &= pts @ np.array(a, dtype=np.int64) == int(b)
    return keep


def minkowski_count(polytope, gens, kvec, box_limit=DEFAULT_BOX_LIMIT) -> int:
    """Number of integer points of ``conv(polytope) + sum k_i [0, gens_i]``."""
    polytope, gens, d = _check(polytope, gens)
    kvec = [int(k) for k in kvec]
    if len(kvec) != len(gens) or min(kvec, default=0) < 0:
        raise DimensionError("kvec must give one nonnegative integer per generator")
    ineqs, eqs = minkowski_hrep(polytope, gens, kvec)
    P = np.array(polytope, dtype=np.int64)
    lo = P.min(axis=0) + sum((k * np.minimum(np.array(v), 0) for k, v in zip(kvec, gens)), np.zeros(d, int))
    hi = P.max(axis=0) + sum((k * np.maximum(np.array(v), 0) for k, v in zip(kvec, gens)), np.zeros(d, int))
    pts = _box_points(lo, hi, box_limit)
    return int(_inside(pts, ineqs, eqs).sum())


def quotient_counts(polytope, X, box_limit=DEFAULT_BOX_LIMIT):
    """Lattice points of the projection of P along span(X).

    Returns ``(rational, integral)``: points of the image lattice quot_X(Z^d)
    inside quot_X(P), and the number of distinct images of P's own lattice
    points.  The first is what the formula needs; the second can be smaller.
    """
    polytope, X, d = _check(polytope, X)
    if X and matrix_rank(X) < len(X):
        raise DimensionError("X must be linearly independent")
    M = nullspace_int(X, d)  # rows: integer basis of the annihilator of span(X)
    if not M:
        return 1, 1
    Mi = np.array(M, dtype=np.int64)
    # image lattice: generated by the columns of M
    B = lattice_basis(Mi.T.tolist())
    Bm = np.array(B, dtype=np.int64).T  # columns form a basis of the image lattice
    r = len(M)
    images = [tuple(int(x) for x in Mi @ np.array(p)) for p in polytope]
    # H-representation of the projected polytope in y = M x coordinates
    nv = r + len(images)
    eqs = []
    for i in range(r):
        a = [0] * nv
        a[i] = 1
        for j, y in enumerate(images):
            a[r + j] = -y[i]
        eqs.append((tuple(a), 0))
    eqs.append((tuple([0] * r + [1] * len(images)), 1))
    ineqs = []
    for j in range(len(images)):
        a = [0] * nv
        a[r + j] = -1
        ineqs.append((tuple(a), 0))
    hin, heq = fourier_motzkin_project(ineqs, range(r, nv), eqs)
    # lattice coordinates z with y = Bm z; bound z via the images of the vertices
    Binv = _inverse(Bm)
    zs = [[sum(Binv[i][j] * y[j] for j in range(r)) for i in range(r)] for y in images]
    lo = [math.floor(min(z[i] for z in zs)) for i in range(r)]
    hi = [math.ceil(max(z[i] for z in zs)) for i in range(r)]
    Z = _box_points(lo, hi, box_limit)
    Y = Z @ Bm.T
    rational = int(_inside(Y, hin, heq).sum())
    lattice = _polytope_lattice_points(polytope, box_limit)
    integral = len({tuple(int(x) for x in Mi @ p) for p in lattice})
    return rational, integral


def _inverse(B):
    r = len(B)
    cols = [solve([[int(B[i][j]) for j in range(r)] for i in range(r)], [int(i == c) for i in range(r)])
            for c in range(r)]
    return [[cols[j][i] for j in range(r)] for i in range(r)]


def _polytope_lattice_points(polytope, box_limit=DEFAULT_BOX_LIMIT):
    ineqs, eqs = minkowski_hrep(polytope, [], [])
    P = np.array(polytope, dtype=np.int64)
    pts = _box_points(P.min(axis=0), P.max(axis=0), box_limit)
    return pts[_inside(pts, ineqs, eqs)]


def minkowski_poly(polytope, gens) -> dict:
    """Quotient formula as a polynomial with one variable per generator.

    Returned as a dict mapping exponent tuples (one 0/1 entry per generator)
    to integer coefficients.
    """
    polytope, gens, d = _check(polytope, gens)
    terms = {}
    for r in range(min(d, len(gens)) + 1):
        for idx in itertools.combinations(range(len(gens)), r):
            X = [gens[i] for i in idx]
            if matrix_rank(X) < r:
                continue
            q, _ = quotient_counts(polytope, X)
            expo = tuple(int(i in idx) for i in range(len(gens)))
            terms[expo] = terms.get(expo, 0) + q * rvol(X)
    return {e: c for e, c in terms.items() if c}


def evaluate_multi(terms: dict, kvec) -> int:
    return sum(c * math.prod(k**e for k, e in zip(kvec, expo)) for expo, c in terms.items())


def minkowski_poly_univariate(polytope, gens) -> EhrhartPoly:
    """Same formula with every generator dilated by a common k."""
    coeffs = {}
    for expo, c in minkowski_poly(polytope, gens).items():
        deg = sum(expo)
        coeffs[deg] = coeffs.get(deg, 0) + c
    return EhrhartPoly({(deg, 0): c for deg, c in coeffs.items()})


def stanley_poly(gens) -> EhrhartPoly:
    """Lattice points of k * zonotope(gens): sum over independent X of rvol(X) k^|X|."""
    gens = [tuple(int(x) for x in g) for g in gens]
    coeffs = {}
    for r in range(len(gens) + 1):
        for X in itertools.combinations(gens, r):
            if r and matrix_rank(X) < r:
                continue
            coeffs[r] = coeffs.get(r, 0) + (rvol(X) if r else 1)
    return EhrhartPoly({(deg, 0): c for deg, c in coeffs.items()})
