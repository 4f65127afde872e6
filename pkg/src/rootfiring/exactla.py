"""Exact linear algebra over the rationals.

Spans, quotient keys, relative volumes and independent subsets of positive
roots, plus a small Fourier-Motzkin projector.  Vectors are sequences of ints
or Fractions; everything returned is built from Fractions or Python ints, so
no floating point enters any result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DependentSet, DimensionError, ResourceLimit

DEFAULT_SUBSET_LIMIT = 10**8


def _root_vec(x):
    """Accept a Root (use its simple-root coordinates) or a plain vector."""
    return getattr(x, "root", x)


# echelon forms ---------------------------------------------------------------

def rref(vectors, ncols=None):
    """Reduced row echelon form with leading ones.

    Returns ``(rows, pivots)`` where rows are tuples of Fractions.
    """
    rows = [[Fraction(x) for x in _root_vec(v)] for v in vectors]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], tuple(pivots)


def matrix_rank(vectors) -> int:
    return len(rref(vectors)[1])


@dataclass(frozen=True)
class SpanKey:
    """Canonical description of a rational subspace by its RREF basis."""

    rows: tuple
    pivots: tuple
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        v = _root_vec(v)
        return all(x == 0 for x in quotient_key(v, self))


def span_key(vectors, ambient=None) -> SpanKey:
    vectors = [_root_vec(v) for v in vectors]
    if ambient is None:
        if not vectors:
            raise DimensionError("ambient dimension needed for the empty span")
        ambient = len(vectors[0])
    rows, pivots = rref(vectors, ambient)
    return SpanKey(tuple(rows), pivots, ambient)


def in_span(v, key: SpanKey) -> bool:
    return key.contains(v)


def quotient_key(v, key: SpanKey) -> tuple:
    """Canonical representative of v + span: clear the pivot coordinates."""
    out = [Fraction(x) for x in _root_vec(v)]
    for row, p in zip(key.rows, key.pivots):
        c = out[p]
        if c:
            out = [x - c * y for x, y in zip(out, row)]
    return tuple(out)


def positive_roots_in_span(sys, key: SpanKey) -> list:
    return [a for a in sys.positive_roots if key.contains(a.root)]


# determinants and volumes ----------------------------------------------------

def det_int(M) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rvol(vectors) -> int:
    """Relative volume: gcd of the maximal minors of the integer row matrix."""
    rows = [tuple(int(x) for x in _root_vec(v)) for v in vectors]
    if not rows:
        return 1
    r, n = len(rows), len(rows[0])
    g = 0
    for cols in combinations(range(n), r):
        g = math.gcd(g, det_int([[row[c] for c in cols] for row in rows]))
    if g == 0:
        raise DependentSet("vectors are linearly dependent")
    return g


def solve(A, b) -> list:
    """Solve the square system A x = b exactly."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise DependentSet("singular system")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


def primitive(v) -> tuple:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    v = [Fraction(x) for x in v]
    lcm = math.lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * lcm) for x in v]
    g = math.gcd(*ints) if ints else 0
    return tuple(x // g for x in ints) if g else tuple(ints)


def nullspace_int(rows, ncols) -> list:
    """Integer basis (primitive vectors) of {x : row . x = 0 for all rows}."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def lattice_basis(gens) -> list:
    """Basis (rows) of the integer lattice generated by ``gens``.

    Uses integer row reduction to a Hermite-style echelon form.
    """
    A = [list(int(x) for x in g) for g in gens]
    if not A:
        return []
    ncols = len(A[0])
    basis = []
    for c in range(ncols):
        while True:
            nz = [i for i in range(len(A)) if A[i][c] != 0]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(A[i][c]))
            for i in nz:
                if i != i0:
                    q = A[i][c] // A[i0][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[i0])]
        nz = [i for i in range(len(A)) if A[i][c] != 0]
        if nz:
            row = A.pop(nz[0])
            if row[c] < 0:
                row = [-x for x in row]
            basis.append(tuple(row))
    return basis


# independent subsets ---------------------------------------------------------

@dataclass(frozen=True)
class IndepSet:
    root_ids: tuple
    rank: int
    span: SpanKey
    rvol: int
    long_count: int
    short_count: int


def count_subsets_bound(m: int, r: int) -> int:
    return sum(math.comb(m, j) for j in range(r + 1))


def enumerate_indep_sets(sys, max_rank=None, limit=DEFAULT_SUBSET_LIMIT):
    """Yield every linearly independent subset of the positive roots.

    Subsets are produced by backtracking over positive-root indices, with an
    incremental echelon basis to reject dependent extensions early.
    """
    pos = sys.positive_roots
    n = sys.rank
    r = n if max_rank is None else min(max_rank, n)
    est = count_subsets_bound(len(pos), r)
    if est > limit:
        raise ResourceLimit(f"{est} candidate subsets exceed limit {limit}", est, limit)

    def reduce(v, basis):
        v = list(v)
        for row, p in basis:
            c = v[p]
            if c:
                v = [x - c * y for x, y in zip(v, row)]
        return v

    def rec(start, chosen, basis):
        ids = tuple(chosen)
        roots = [pos[i] for i in ids]
        nlong = sum(a.is_long for a in roots)
        yield IndepSet(ids, len(ids), span_key([a.root for a in roots], n),
                       rvol([a.root for a in roots]), nlong, len(ids) - nlong)
        if len(ids) == r:
            return
        for i in range(start, len(pos)):
            v = reduce([Fraction(x) for x in pos[i].root], basis)
            p = next((c for c, x in enumerate(v) if x != 0), None)
            if p is None:
                continue
            v = [x / v[p] for x in v]
            # keep earlier basis rows reduced at the new pivot
            new_basis = [(tuple(x - row[p] * y for x, y in zip(row, v)), q) for row, q in basis]
            new_basis.append((tuple(v), p))
            chosen.append(i)
            yield from rec(i + 1, chosen, new_basis)
            chosen.pop()

    yield from rec(0, [], [])


# Fourier-Motzkin -------------------------------------------------------------

def _normalize(a, b):
    """Scale ``a . x <= b`` (or ``=``) to primitive integer form."""
    vals = [Fraction(x) for x in a] + [Fraction(b)]
    lcm = math.lcm(*(x.denominator for x in vals))
    ints = [int(x * lcm) for x in vals]
    g = math.gcd(*ints[:-1])
    if g == 0:
        return tuple(ints[:-1]), ints[-1]
    return tuple(x // g for x in ints[:-1]), Fraction(ints[-1], g)


def _prune(ineqs):
    """Drop trivial and duplicate rows; keep the tightest bound per normal."""
    best = {}
    infeasible = False
    for a, b in ineqs:
        if not any(a):
            if b < 0:
                infeasible = True
            continue
        if a not in best or b < best[a]:
            best[a] = b
    out = sorted(best.items())
    if infeasible:
        out.append((tuple(0 for _ in (ineqs[0][0] if ineqs else ())), Fraction(-1)))
    return out


def fourier_motzkin_project(ineqs, drop_dims, eqs=()):
    """Project ``{x : A x <= b, E x = f}`` away from the coordinates in drop_dims.

    ``ineqs`` and ``eqs`` are lists of ``(coeffs, rhs)``.  Equalities are used
    for substitution when they involve the eliminated variable, which keeps the
    inequality count small.  Returns ``(ineqs, eqs)`` on the kept coordinates,
    in their original order.
    """
    rows = list(ineqs) + list(eqs)
    if not rows:
        return [], []
    dim = len(rows[0][0])
    if any(len(a) != dim for a, _ in rows):
        raise DimensionError("inconsistent inequality lengths")
    drop = sorted(set(drop_dims))
    if any(not 0 <= j < dim for j in drop):
        raise DimensionError(f"cannot drop coordinates {drop_dims} of a {dim}-dim system")
    ins = _prune([_normalize(a, b) for a, b in ineqs])
    es = [_normalize(a, b) for a, b in eqs]
    for j in drop:
        sub = next((e for e in es if e[0][j] != 0), None)
        if sub is not None:
            es.remove(sub)
            sa, sb = sub

            def eliminate(a, b):
                c = Fraction(a[j], sa[j])
                return tuple(x - c * y for x, y in zip(a, sa)), b - c * sb

            ins = _prune([_normalize(*eliminate(a, b)) for a, b in ins])
            es = [_normalize(*eliminate(a, b)) for a, b in es]
            continue
        pos = [(a, b) for a, b in ins if a[j] > 0]
        neg = [(a, b) for a, b in ins if a[j] < 0]
        out = [(a, b) for a, b in ins if a[j] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = -an[j], ap[j]
                a = tuple(cp * x + cn * y for x, y in zip(ap, an))
                out.append(_normalize(a, cp * bp + cn * bn))
        ins = _prune(out)
    keep = [c for c in range(dim) if c not in drop]

    def restrict(a):
        return tuple(a[c] for c in keep)

    ins = _prune([(restrict(a), b) for a, b in ins]) if ins else []
    es = [(restrict(a), b) for a, b in es if any(a) or b != 0]
    return ins, es


def satisfies(point, ineqs, eqs=()) -> bool:
    for a, b in ineqs:
        if sum(x * y for x, y in zip(a, point)) > b:
            return False
    for a, b in eqs:
        if sum(x * y for x, y in zip(a, point)) != b:
            return False
    return True


def hull_hrep(points):
    """H-representation of the convex hull of rational points.

    Built by projecting the convex-combination description; returns
    ``(ineqs, eqs)`` in the points' coordinates.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise DimensionError("empty point set")
    d, m = len(pts[0]), len(pts)
    # variables: x (d) then lambda (m)
    eqs = []
    for i in range(d):
        a = [0] * (d + m)
        a[i] = 1
        for j, p in enumerate(pts):
            a[d + j] = -p[i]
        eqs.append((tuple(a), 0))
    eqs.append((tuple([0] * d + [1] * m), 1))
    ineqs = []
    for j in range(m):
        a = [0] * (d + m)
        a[d + j] = -1
        ineqs.append((tuple(a), 0))
    return fourier_motzkin_project(ineqs, range(d, d + m), eqs)
