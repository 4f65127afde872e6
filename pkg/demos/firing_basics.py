"""
Interval firing on a rank-two system
====================================

Start from a weight, fire positive roots while the pairing lands in the
allowed interval, and look at where everything ends up.
"""

from collections import Counter

from rootfiring import build
from rootfiring.firing import FiringMode, stabilize, stable_label
from rootfiring.permutohedra import discrete_permutohedron

b2 = build("B2")
print("positive roots of B2 (simple-root coordinates):")
for r in b2.positive_roots:
    print("  ", r.root, "long" if r.is_long else "short")

# a single stabilization, symmetric mode, k_l = k_s = 1
mu = (-2, 1)
stable = stabilize(b2, mu, (1, 1), FiringMode.SYMMETRIC)
print(f"\n{mu} stabilizes to {stable}, the stable point of {stable_label(b2, stable, (1, 1))}")

# every point of the deformed permutohedron of lam lands on a label below lam
k, lam = (1, 1), (1, 1)
top = tuple(a + b for a, b in zip(lam, b2.rho_k(k)))
sources = discrete_permutohedron(b2, top).points
fibers = Counter()
for p in sources:
    mu = tuple(int(x) for x in p)
    fibers[stable_label(b2, stabilize(b2, mu, k, FiringMode.SYMMETRIC), k)] += 1
print(f"\n{len(sources)} sources above {lam} split into fibers:")
for nu, size in sorted(fibers.items()):
    print(f"   {nu}: {size}")
