"""
A lattice triangle plus a segment
=================================

The quotient formula for P + k[0, v] needs the lattice points of the
projection of P in the projected lattice, which can outnumber the
projections of P's own lattice points.
"""

from rootfiring.zonotope import minkowski_count, minkowski_poly_univariate, quotient_counts

triangle = [(0, 3), (1, 4), (2, 0)]
v = [(1, 1)]

rational, integral = quotient_counts(triangle, v)
print(f"projection along (1, 1): {rational} lattice points, {integral} images of lattice points")

poly = minkowski_poly_univariate(triangle, v)
print("formula:", poly)
for k in range(6):
    print(f"  k = {k}: formula {poly(k):>3}, direct {minkowski_count(triangle, v, [k]):>3}")
