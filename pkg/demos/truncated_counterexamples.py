"""
Where the truncated formula breaks
==================================

For every weight whose dominant form has 0/1 coordinates, compare the
simulated truncated fiber polynomial with the subset-sum formula that
works in the symmetric case.  G2 and C3 already disagree.
"""

import time

from rootfiring import build
from rootfiring.ehrhart import counterexample_scan

for label in ["A2", "B2", "G2", "A3", "B3", "C3"]:
    start = time.perf_counter()
    res = counterexample_scan(build(label))
    print(f"{label}: {res.domain_size} weights, {len(res.counterexamples)} disagreements "
          f"({time.perf_counter() - start:.1f}s)")
    for r in res.counterexamples:
        print(f"    {r.lam}:  simulated {r.lhs}   formula {r.rhs}")
