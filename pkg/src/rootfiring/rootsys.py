"""Irreducible crystallographic root systems.

A system is built from its Cartan-Killing label (Bourbaki numbering).  Weights
are plain tuples of integers in the basis of fundamental weights, so they are
hashable and cheap to store in sets.  Simple roots are indexed from 0.

Conventions::

    cartan[i][j] = <alpha_i, alpha_j^vee>      (row i = alpha_i in weight coords)
    cartan @ diag(symmetrizer)  is symmetric, symmetrizer[i] ~ |alpha_i|^2
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BadParam, InvalidType, NotDominant

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class TypeLabel:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidType(f"rank must be an int, got {n!r}")
        if fam in _MIN_RANK:
            if n < _MIN_RANK[fam]:
                raise InvalidType(f"{fam}{n} is not admissible (need rank >= {_MIN_RANK[fam]})")
        elif fam in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[fam]:
                raise InvalidType(f"{fam}{n} is not admissible")
        else:
            raise InvalidType(f"unknown family {fam!r}")

    @classmethod
    def parse(cls, text: str) -> "TypeLabel":
        text = text.strip().replace("_", "")
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidType(f"cannot parse type label {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Root:
    """A root together with the data needed for pairings and firing moves."""

    index: int
    root: tuple  # coordinates in simple roots
    coroot: tuple  # coordinates in simple coroots
    weight: tuple  # coordinates in fundamental weights
    is_long: bool
    is_positive: bool

    @property
    def height(self) -> int:
        return sum(self.root)


@dataclass(frozen=True)
class DeformParam:
    """Deformation parameter k: one value on long roots, one on short roots.

    For simply-laced systems only ``k_long`` matters.
    """

    k_long: int
    k_short: int

    def __post_init__(self):
        if self.k_long < 0 or self.k_short < 0:
            raise BadParam(f"negative deformation parameter {self}")

    @classmethod
    def uniform(cls, k: int) -> "DeformParam":
        return cls(k, k)

    def of(self, root: Root) -> int:
        return self.k_long if root.is_long else self.k_short

    def is_good(self, simply_laced: bool) -> bool:
        # k_short = 0 forces k_long = 0 outside the simply-laced case
        return simply_laced or self.k_short > 0 or self.k_long == 0

    def __str__(self):
        return f"(k_l={self.k_long}, k_s={self.k_short})"


def as_param(k) -> DeformParam:
    """Accept an int, a pair ``(k_long, k_short)`` or a DeformParam."""
    if isinstance(k, DeformParam):
        return k
    if isinstance(k, (int, np.integer)):
        return DeformParam.uniform(int(k))
    kl, ks = k
    return DeformParam(int(kl), int(ks))


def _diagram(family: str, n: int):
    """Edges (0-based) and relative squared lengths of the simple roots."""
    if family in "ABC":
        edges = [(i, i + 1) for i in range(n - 1)]
        if family == "A":
            lengths = [1] * n
        elif family == "B":
            lengths = [2] * (n - 1) + [1]
        else:
            lengths = [1] * (n - 1) + [2]
    elif family == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        lengths = [1] * n
    elif family == "E":
        # chain 1-3-4-...-n with node 2 attached to node 4
        chain = [0] + list(range(2, n))
        edges = list(zip(chain, chain[1:])) + [(1, 3)]
        lengths = [1] * n
    elif family == "F":
        edges = [(0, 1), (1, 2), (2, 3)]
        lengths = [2, 2, 1, 1]
    else:
        edges = [(0, 1)]
        lengths = [1, 3]
    return edges, lengths


def _cartan_matrix(family: str, n: int) -> np.ndarray:
    edges, ell = _diagram(family, n)
    C = 2 * np.eye(n, dtype=np.int64)
    for i, j in edges:
        m = max(ell[i], ell[j])
        C[i, j] = -(m // ell[j])
        C[j, i] = -(m // ell[i])
    return C


def _symmetrizer(C: np.ndarray) -> tuple:
    """Smallest positive integers d with C @ diag(d) symmetric."""
    n = len(C)
    d = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j in range(n):
            if C[i, j] != 0 and d[j] is None:
                # C_ij d_j = C_ji d_i
                d[j] = d[i] * int(C[j, i]) / int(C[i, j])
                queue.append(j)
    if any(x is None for x in d):
        raise InvalidType("Dynkin diagram is not connected")
    lcm = math.lcm(*(x.denominator for x in d))
    ints = [int(x * lcm) for x in d]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def _inverse_fraction(M) -> list:
    n = len(M)
    A = [[Fraction(int(M[i][j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


class RootSystem:
    """Roots, Cartan data and Weyl group actions for one irreducible type.

    Use :func:`build` rather than calling the constructor directly; it caches.
    """

    def __init__(self, label: TypeLabel):
        self.label = label
        n = self.rank = label.rank
        C = self.cartan = _cartan_matrix(label.family, n)
        d = self.symmetrizer = _symmetrizer(C)
        self.gram = C * np.array(d, dtype=np.int64)[None, :]
        assert (self.gram == self.gram.T).all()
        self.inv_cartan = _inverse_fraction(C)
        self.index_of_connection = int(round(np.linalg.det(C)))
        # integer adjugate: root coords of weight a are (a @ adj) / det
        self._adj = np.array([[int(x * self.index_of_connection) for x in row]
                              for row in self.inv_cartan], dtype=np.int64)
        self._build_roots()

    # construction ---------------------------------------------------------

    def _build_roots(self):
        n, C, d = self.rank, self.cartan, self.symmetrizer
        seen = set()
        queue = deque()
        for i in range(n):
            e = tuple(int(i == j) for j in range(n))
            seen.add(e)
            queue.append(e)
        while queue:
            beta = queue.popleft()
            b = np.array(beta)
            pair = b @ C
            for i in range(n):
                if pair[i] == 0:
                    continue
                img = list(beta)
                img[i] -= int(pair[i])
                img = tuple(img)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        pos = sorted((r for r in seen if min(r) >= 0), key=lambda r: (sum(r), tuple(-x for x in r)))
        dmax = max(d)
        roots = []
        for sign in (1, -1):
            for r in pos:
                c = tuple(sign * x for x in r)
                # d_alpha = (alpha, alpha)/2 in units where (alpha_i, alpha_i)/2 = d_i
                arr = np.array(c)
                dalpha = int(arr @ self.gram @ arr) // 2
                cor = []
                for i in range(n):
                    q, rem = divmod(c[i] * d[i], dalpha)
                    assert rem == 0
                    cor.append(q)
                roots.append(Root(len(roots), c, tuple(cor), tuple(int(x) for x in arr @ C),
                                  dalpha == dmax, sign == 1))
        self.roots = roots
        self.positive_roots = roots[: len(pos)]
        self.simple_roots = [next(r for r in self.positive_roots if r.height == 1 and r.root[i] == 1)
                             for i in range(n)]
        self.simply_laced = len(set(d)) == 1
        self.highest_root = max(self.positive_roots, key=lambda r: r.height)
        short = [r for r in self.positive_roots if not r.is_long]
        self.highest_short_root = max(short, key=lambda r: r.height) if short else self.highest_root
        self.pos_coroots = np.array([r.coroot for r in self.positive_roots], dtype=np.int64)
        self.pos_weights = np.array([r.weight for r in self.positive_roots], dtype=np.int64)
        self.pos_long = np.array([r.is_long for r in self.positive_roots], dtype=bool)
        self.pos_roots = np.array([r.root for r in self.positive_roots], dtype=np.int64)
        self._root_index = {r.root: r.index for r in roots}

    # basic data ------------------------------------------------------------

    def __repr__(self):
        return f"RootSystem({self.label})"

    @property
    def weyl_order(self) -> int:
        """|W| = n! * f * prod of highest-root coefficients."""
        return (math.factorial(self.rank) * self.index_of_connection
                * math.prod(self.highest_root.root))

    @property
    def rho(self) -> tuple:
        return (1,) * self.rank

    def root_by_coords(self, coords) -> Root:
        return self.roots[self._root_index[tuple(coords)]]

    def k_vector(self, k) -> np.ndarray:
        """k(alpha) for each positive root, in order."""
        k = as_param(k)
        return np.where(self.pos_long, k.k_long, k.k_short).astype(np.int64)

    def rho_k(self, k) -> tuple:
        """rho_k = sum k(alpha_i) omega_i."""
        k = as_param(k)
        return tuple(k.of(a) for a in self.simple_roots)

    def check_param(self, k) -> DeformParam:
        k = as_param(k)
        if not k.is_good(self.simply_laced):
            raise BadParam(f"{k} is not a good parameter for {self.label}")
        return k

    # coordinates -----------------------------------------------------------

    def root_coords(self, lam) -> tuple:
        """Coordinates of a weight in the basis of simple roots (Fractions)."""
        f = self.index_of_connection
        return tuple(Fraction(int(x), f) for x in np.asarray(lam, dtype=np.int64) @ self._adj)

    def weight_of(self, root_coords) -> tuple:
        """Inverse of :meth:`root_coords`; works for integer or Fraction input."""
        C = self.cartan
        n = self.rank
        return tuple(sum(root_coords[i] * int(C[i, j]) for i in range(n)) for j in range(n))

    def in_root_lattice(self, lam) -> bool:
        return all(x.denominator == 1 for x in self.root_coords(lam))

    def same_coset(self, lam, mu) -> bool:
        return self.in_root_lattice(tuple(a - b for a, b in zip(lam, mu)))

    def leq(self, mu, lam) -> bool:
        """Root order mu <= lam: lam - mu is a nonnegative integer root combination."""
        diff = np.asarray(lam, dtype=np.int64) - np.asarray(mu, dtype=np.int64)
        c = diff @ self._adj
        f = self.index_of_connection
        return bool((c % f == 0).all() and (c >= 0).all())

    # pairings and reflections ----------------------------------------------

    def pairing(self, lam, root: Root) -> int:
        """<lam, alpha^vee> for a weight lam in fundamental-weight coordinates."""
        return sum(a * c for a, c in zip(lam, root.coroot))

    def pairings(self, lam) -> np.ndarray:
        """Pairings of lam (or each row of an array) with all positive coroots."""
        return np.asarray(lam, dtype=np.int64) @ self.pos_coroots.T

    def reflect(self, lam, i: int) -> tuple:
        a = lam[i]
        if a == 0:
            return tuple(lam)
        row = self.cartan[i]
        return tuple(x - a * int(c) for x, c in zip(lam, row))

    def apply_word(self, word, lam) -> tuple:
        """Apply s_{word[0]} ... s_{word[-1]} to lam (rightmost letter first)."""
        for i in reversed(word):
            lam = self.reflect(lam, i)
        return tuple(lam)

    def is_dominant(self, lam) -> bool:
        return all(x >= 0 for x in lam)

    def dominant_rep(self, lam):
        """Return ``(dom, word)`` with ``apply_word(word, dom) == lam``.

        The word is built by reflecting at the smallest index with a negative
        coordinate, which fixes a canonical choice of w_lam.
        """
        lam = tuple(int(x) for x in lam)
        word = []
        while True:
            i = next((j for j, x in enumerate(lam) if x < 0), None)
            if i is None:
                return lam, tuple(word)
            lam = self.reflect(lam, i)
            word.append(i)

    def weyl_orbit(self, lam, subset=None) -> set:
        """Orbit of lam under the parabolic subgroup generated by ``subset``.

        ``subset`` defaults to all simple indices (the full Weyl group).
        """
        gens = range(self.rank) if subset is None else tuple(subset)
        start = tuple(int(x) for x in lam)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for i in gens:
                if v[i] == 0:
                    continue
                w = self.reflect(v, i)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def eta(self, lam, k) -> tuple:
        """eta_k(lam) = lam + w_lam(rho_k)."""
        _, word = self.dominant_rep(lam)
        shift = self.apply_word(word, self.rho_k(k))
        return tuple(a + b for a, b in zip(lam, shift))

    def i01_set(self, lam) -> frozenset:
        """Simple indices i with <lam, alpha_i^vee> in {0, 1} (lam dominant)."""
        if not self.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        return frozenset(i for i, x in enumerate(lam) if x in (0, 1))

    def i0_set(self, lam) -> frozenset:
        if not self.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        return frozenset(i for i, x in enumerate(lam) if x == 0)

    def forbidden_sym(self, lam) -> bool:
        """True when some positive root pairs with lam to -1."""
        return bool((self.pairings(lam) == -1).any())


@lru_cache(maxsize=None)
def _build_cached(label: TypeLabel) -> RootSystem:
    return RootSystem(label)


def build(label) -> RootSystem:
    """Build (or fetch from cache) the root system for a label like ``"B3"``."""
    if isinstance(label, str):
        label = TypeLabel.parse(label)
    return _build_cached(label)

