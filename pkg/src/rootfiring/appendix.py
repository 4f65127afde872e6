"""Projection-dilation constants of root polytopes.

For a maximal parabolic sub-system Phi_i (all simple roots except alpha_i) we
compute the largest value of ``<v, alpha^vee>`` where v runs over the polar
dual ``{v in U : <v, beta^vee> <= 1 for beta in Phi_i}`` and alpha over the
roots outside Phi_i.  Since W_i permutes the outside coroots and the polar
dual's vertices form W_i-orbits of its dominant vertices, it suffices to
pair dominant vertices with every outside coroot.

Dominant vertices of the polar dual of an irreducible system are
``omega_j / a_j`` for the nodes j whose removal keeps the dual extended Dynkin
diagram connected, where ``a_j`` are the coefficients of the highest coroot.

All vectors here are rational root-coordinate tuples in the ambient system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .exactla import matrix_rank, solve, span_key
from .rootsys import Root, RootSystem


@dataclass
class Factor:
    """An irreducible component of a sub-root system."""

    simple: list  # ambient Root objects, a simple system of the factor
    roots: list  # all ambient Root objects in the factor
    cartan: list  # cartan[j][k] = <beta_j, beta_k^vee>

    @property
    def rank(self) -> int:
        return len(self.simple)

    @property
    def label(self) -> str:
        r = self.rank
        npos = len(self.roots) // 2
        lengths = {x.is_long for x in self.roots}
        if len(lengths) == 1:
            if npos == r * (r + 1) // 2:
                return f"A{r}"
            if npos == r * (r - 1):
                return f"D{r}"
            return {36: "E6", 63: "E7", 120: "E8"}[npos]
        if r == 2 and npos == 6:
            return "G2"
        if r == 4 and npos == 24:
            return "F4"
        nshort = sum(not x.is_long for x in self.roots) // 2
        return f"B{r}" if nshort == r else f"C{r}"


def _gram(sys: RootSystem, u, v):
    G = sys.gram
    n = sys.rank
    return sum(u[i] * int(G[i, j]) * v[j] for i in range(n) for j in range(n))


def pair(sys: RootSystem, v, root: Root):
    """<v, root^vee> for v in ambient root coordinates (ints or Fractions)."""
    C = sys.cartan
    n = sys.rank
    return sum(v[i] * sum(root.coroot[j] * int(C[i, j]) for j in range(n)) for i in range(n))


def sub_root_system(sys: RootSystem, generators) -> list:
    """Irreducible factors of the roots of sys lying in the span of ``generators``."""
    gens = [getattr(g, "root", g) for g in generators]
    if not gens:
        return []
    key = span_key(gens, sys.rank)
    inside = [r for r in sys.roots if key.contains(r.root)]
    pos = [r for r in inside if r.is_positive]
    posset = {r.root for r in pos}
    simple = []
    for b in pos:
        if not any(tuple(x - y for x, y in zip(b.root, g.root)) in posset for g in pos if g is not b):
            simple.append(b)
    # connected components of the pairing graph on the simple roots
    comps = []
    unseen = list(range(len(simple)))
    while unseen:
        stack = [unseen.pop(0)]
        comp = set(stack)
        while stack:
            j = stack.pop()
            for k in list(unseen):
                if _gram(sys, simple[j].root, simple[k].root) != 0:
                    unseen.remove(k)
                    comp.add(k)
                    stack.append(k)
        comps.append(sorted(comp))
    factors = []
    for comp in comps:
        sroots = [simple[j] for j in comp]
        fkey = span_key([b.root for b in sroots], sys.rank)
        froots = [r for r in inside if fkey.contains(r.root)]
        cart = [[pair(sys, bj.root, bk) for bk in sroots] for bj in sroots]
        factors.append(Factor(sroots, froots, cart))
    return factors


def _factor_coords(factor: Factor, sys: RootSystem, root: Root) -> list:
    """Coordinates of an ambient root in the factor's simple roots."""
    pairings = [pair(sys, root.root, b) for b in factor.simple]
    C = factor.cartan
    r = factor.rank
    # <root, beta_k^vee> = sum_j c_j C[j][k]
    return solve([[C[j][k] for j in range(r)] for k in range(r)], pairings)


@dataclass
class DualVertexSet:
    factor: Factor
    nodes: list  # positions j in factor.simple
    coefficients: list  # a_j
    vertices: list  # omega'_j / a_j as ambient root-coordinate tuples


def dual_polytope_dominant_vertices(sys: RootSystem, factor: Factor) -> DualVertexSet:
    r = factor.rank
    # coroot of gamma in the factor's simple coroots: c_j |beta_j|^2 / |gamma|^2
    best = None
    for g in factor.roots:
        if not g.is_positive:
            continue
        c = _factor_coords(factor, sys, g)
        gg = _gram(sys, g.root, g.root)
        cv = [c[j] * _gram(sys, b.root, b.root) / gg for j, b in enumerate(factor.simple)]
        if best is None or sum(cv) > sum(best[1]):
            best = (g, cv)
    theta, a = best
    assert all(x.denominator == 1 for x in a)
    a = [int(x) for x in a]
    # dual extended diagram: factor nodes 0..r-1 and -theta^vee as node r
    adj = {j: set() for j in range(r + 1)}
    for j in range(r):
        for k in range(j + 1, r):
            if _gram(sys, factor.simple[j].root, factor.simple[k].root) != 0:
                adj[j].add(k)
                adj[k].add(j)
        if _gram(sys, factor.simple[j].root, theta.root) != 0:
            adj[j].add(r)
            adj[r].add(j)

    def connected_without(j):
        nodes = [x for x in range(r + 1) if x != j]
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y != j and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(nodes)

    # omega'_j = sum_m inv[j][m] beta_m, where inv = cartan^{-1}
    C = factor.cartan
    inv_cols = [solve([[C[m][k] for m in range(r)] for k in range(r)], [int(k == j) for k in range(r)])
                for j in range(r)]
    nodes, coeffs, verts = [], [], []
    for j in range(r):
        if not connected_without(j):
            continue
        c = inv_cols[j]
        v = [Fraction(0)] * sys.rank
        for m, b in enumerate(factor.simple):
            for t in range(sys.rank):
                v[t] += c[m] * b.root[t]
        nodes.append(j)
        coeffs.append(a[j])
        verts.append(tuple(x / a[j] for x in v))
    return DualVertexSet(factor, nodes, coeffs, verts)


def parabolic_factors(sys: RootSystem, i: int) -> list:
    return sub_root_system(sys, [sys.simple_roots[j] for j in range(sys.rank) if j != i])


def dominant_vertices(sys: RootSystem, factors) -> list:
    """Dominant vertices of the polar dual of a product: one vertex per factor, summed."""
    per = [dual_polytope_dominant_vertices(sys, f).vertices for f in factors]
    out = []
    for combo in product(*per):
        v = [Fraction(0)] * sys.rank
        for part in combo:
            v = [x + y for x, y in zip(v, part)]
        out.append(tuple(v))
    return out


@dataclass
class MaxReport:
    label: str
    node: int  # 0-based removed simple index
    value: Fraction
    vertex: tuple
    coroot_of: tuple  # root coordinates of the root whose coroot attains the max


def outside_roots(sys: RootSystem, factors) -> list:
    inside = {r.root for f in factors for r in f.roots}
    return [r for r in sys.roots if r.root not in inside]


def projection_dilation_max(sys: RootSystem, i: int) -> MaxReport:
    factors = parabolic_factors(sys, i)
    verts = dominant_vertices(sys, factors)
    best = None
    for v in verts:
        for a in outside_roots(sys, factors):
            val = pair(sys, v, a)
            if best is None or val > best[0]:
                best = (Fraction(val), v, a.root)
    return MaxReport(str(sys.label), i, *best)


def kappa_statistics(sys: RootSystem):
    """``(kappa, rank * (2 - kappa))`` with kappa the largest maximum over nodes."""
    kappa = max(projection_dilation_max(sys, i).value for i in range(sys.rank))
    return kappa, sys.rank * (2 - kappa)


# validation helpers -------------------------------------------------------------

def polar_vertices_bruteforce(sys: RootSystem, factors) -> set:
    """Vertices of ``{v in span : <v, beta^vee> <= 1 for all beta}`` by solving
    every independent choice of tight constraints."""
    if not factors:
        return {tuple(Fraction(0) for _ in range(sys.rank))}
    simple = [b for f in factors for b in f.simple]
    roots = [r for f in factors for r in f.roots]
    r = len(simple)
    # v = sum c_m beta_m ; <v, gamma^vee> = sum_m c_m <beta_m, gamma^vee>
    rows = {g.root: [pair(sys, b.root, g) for b in simple] for g in roots}
    out = set()
    for tight in combinations(roots, r):
        A = [rows[g.root] for g in tight]
        if matrix_rank(A) < r:
            continue
        c = solve(A, [1] * r)
        if all(sum(x * y for x, y in zip(rows[g.root], c)) <= 1 for g in roots):
            v = [Fraction(0)] * sys.rank
            for cm, b in zip(c, simple):
                v = [x + cm * y for x, y in zip(v, b.root)]
            out.add(tuple(v))
    return out


def vertex_orbit(sys: RootSystem, factors, verts) -> set:
    """Closure of ``verts`` under reflections in the factors' simple roots."""
    simple = [b for f in factors for b in f.simple]
    seen = set(verts)
    stack = list(verts)
    while stack:
        v = stack.pop()
        for b in simple:
            c = pair(sys, v, b)
            if c:
                w = tuple(x - c * y for x, y in zip(v, b.root))
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


@dataclass
class OshimaReport:
    label: str
    node: int
    groups: dict  # (coefficient of alpha_i^vee, "long"/"short") -> list of coroot tuples
    ok: bool


def oshima_check(sys: RootSystem, i: int) -> OshimaReport:
    """Group the Phi_i-dominant outside coroots by (i-th coordinate, length).

    Uniqueness within each group is the claim being checked.
    """
    factors = parabolic_factors(sys, i)
    C = sys.cartan
    n = sys.rank
    groups = {}
    for a in outside_roots(sys, factors):
        # <alpha_j, a^vee> >= 0 for all j != i
        if all(sum(a.coroot[k] * int(C[j, k]) for k in range(n)) >= 0 for j in range(n) if j != i):
            long_coroot = a.is_long if sys.simply_laced else not a.is_long
            key = (a.coroot[i], "long" if long_coroot else "short")
            groups.setdefault(key, []).append(a.coroot)
    ok = all(len(v) == 1 for v in groups.values())
    return OshimaReport(str(sys.label), i, groups, ok)
