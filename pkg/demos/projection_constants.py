"""
Projection-dilation constants
=============================

Drop one simple root, project the full root polytope onto the span of the
rest, and ask how far the projection sticks out of the smaller root
polytope.  The worst case over all nodes stays below 2.
"""

from rootfiring import build
from rootfiring.appendix import kappa_statistics, parabolic_factors, projection_dilation_max

for label in ["A4", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8"]:
    s = build(label)
    print(label)
    for i in range(s.rank):
        rep = projection_dilation_max(s, i)
        rest = " x ".join(f.label for f in parabolic_factors(s, i)) or "-"
        print(f"    node {i + 1}: remaining {rest:<12} max {rep.value}")
    kappa, gap = kappa_statistics(s)
    print(f"    kappa = {kappa}, rank * (2 - kappa) = {gap}")
