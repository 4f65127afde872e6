"""Type A specialization in the coordinates of Z^{n+1}.

Here weights are integer vectors ``a = (a_1 >= ... >= a_{n+1})``, the
permutohedron is the usual one, and linearly independent sets of positive
roots are forests on ``n + 1`` labeled vertices.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

from .poly import EhrhartPoly


def partitions(m: int, largest=None):
    """Integer partitions of m as weakly decreasing tuples."""
    if largest is None:
        largest = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def f_lambda(lam) -> int:
    """Number of labeled forests on sum(lam) vertices with component sizes lam.

    Choose the vertex blocks (a multinomial, divided by the symmetry of equal
    parts), then a spanning tree on each block (Cayley: s^(s-2) trees).
    """
    lam = [x for x in lam if x > 0]
    N = sum(lam)
    ways = math.factorial(N)
    for x in lam:
        ways //= math.factorial(x)
    for mult in Counter(lam).values():
        ways //= math.factorial(mult)
    trees = 1
    for x in lam:
        trees *= x ** (x - 2) if x >= 2 else 1
    return ways * trees


def forest_counts_bruteforce(N: int) -> Counter:
    """Forests on N labeled vertices by component-size partition, by enumeration."""
    edges = list(itertools.combinations(range(N), 2))
    out = Counter()
    for mask in range(1 << len(edges)):
        parent = list(range(N))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for b, (u, v) in enumerate(edges):
            if mask >> b & 1:
                ru, rv = find(u), find(v)
                if ru == rv:
                    acyclic = False
                    break
                parent[ru] = rv
        if acyclic:
            sizes = Counter(find(x) for x in range(N))
            out[tuple(sorted(sizes.values(), reverse=True))] += 1
    return out


def compositions_fitting(i: int, lam) -> int:
    """Tuples (mu_1, ..., mu_l) with 0 <= mu_j <= lam_j summing to i (l = len(lam))."""
    lam = [x for x in lam if x > 0]
    count = [1] + [0] * i
    for part in lam:
        new = [0] * (i + 1)
        for total in range(i + 1):
            new[total] = sum(count[total - t] for t in range(min(part, total) + 1))
        count = new
    return count[i]


def lattice_points(a) -> list:
    """Integer points of the permutohedron of a (points majorized by a)."""
    a = sorted(a, reverse=True)
    N = len(a)
    prefix = list(itertools.accumulate(a))
    out = []
    for z in itertools.product(range(a[-1], a[0] + 1), repeat=N):
        if sum(z) != prefix[-1]:
            continue
        zs = sorted(z, reverse=True)
        if all(s <= p for s, p in zip(itertools.accumulate(zs), prefix)):
            out.append(z)
    return out


def quot_lambda(z, lam) -> tuple:
    out, start = [], 0
    for part in lam:
        out.append(sum(z[start:start + part]))
        start += part
    return tuple(out)


def typeA_poly(a) -> EhrhartPoly:
    """Sum over partitions lam of #quot_lam(points of Pi(a)) * f_lam * k^(n+1-l(lam))."""
    a = tuple(a)
    if any(x < y for x, y in zip(a, a[1:])):
        raise ValueError(f"{a} is not weakly decreasing")
    N = len(a)
    pts = lattice_points(a)
    coeffs = Counter()
    for lam in partitions(N):
        q = len({quot_lambda(z, lam) for z in pts})
        coeffs[N - len(lam)] += q * f_lambda(lam)
    return EhrhartPoly({(d, 0): c for d, c in coeffs.items()})


def typeA_count(a, k: int) -> int:
    return typeA_poly(a)(k)


def typeA_direct(a, k: int) -> int:
    """Lattice points of Pi(a + k * (n, n-1, ..., 0)) by enumeration."""
    N = len(a)
    return len(lattice_points([x + k * (N - 1 - i) for i, x in enumerate(a)]))
