"""
Fiber-size polynomials of B3
============================

Fit symmetric and truncated fiber sizes by interpolation, compare the
symmetric ones with the closed formula, and evaluate at k = -1.
"""

from rootfiring import build
from rootfiring.ehrhart import group_by_coset, sym_formula
from rootfiring.firing import FiringMode, simulated_polys

b3 = build("B3")
weights = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]

sim = {}
for mode in FiringMode:
    for top, members in group_by_coset(b3, weights).items():
        for lam, p in simulated_polys(b3, top, mode, members).items():
            sim[lam, mode] = p

print(f"{'weight':<12}{'symmetric (k_l = k_s = k)':<30}{'at -1':>6}   {'truncated':<26}{'at -1':>6}")
for lam in weights:
    s, t = sim[lam, FiringMode.SYMMETRIC], sim[lam, FiringMode.TRUNCATED]
    assert s == sym_formula(b3, lam)
    print(f"{str(lam):<12}{s.format_diagonal():<30}{s(-1, -1):>6}   {t.format_diagonal():<26}{t(-1, -1):>6}")

print("\nfull two-variable form of the symmetric polynomial of (0, 1, 0):")
print("  ", sim[(0, 1, 0), FiringMode.SYMMETRIC])
