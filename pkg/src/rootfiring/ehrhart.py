"""Closed formulas for fiber-size polynomials and the counterexample scan.

Both formulas are sums over linearly independent sets X of positive roots of
``rvol(X) * k_l^#long(X) * k_s^#short(X)`` times a count that depends only on
the positive roots in the span of X.  Summation is therefore done span by span
using :func:`rootfiring.permutohedra.span_groups`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantViolation
from .firing import FiringMode, fiber_table, simulated_polys
from .permutohedra import join_dominant, span_groups
from .poly import EhrhartPoly, hstar_numerator, reciprocity_eval  # noqa: F401
from .rootsys import RootSystem


def _zero_one(pairs: np.ndarray) -> np.ndarray:
    return (pairs == 0) | (pairs == 1)


def sym_formula(sys: RootSystem, lam) -> EhrhartPoly:
    """Symmetric fiber-size polynomial of lam from the closed formula.

    Zero when some positive root pairs with lam to -1.  Otherwise each span
    contributes the number of mu in ``w_lam W_I (lam_dom)`` (I the simple
    indices where lam_dom pairs to 0 or 1) whose pairings with every positive
    root in the span are 0 or 1.
    """
    lam = tuple(int(x) for x in lam)
    if sys.forbidden_sym(lam):
        return EhrhartPoly()
    dom, word = sys.dominant_rep(lam)
    orbit = sorted(sys.weyl_orbit(dom, sorted(sys.i01_set(dom))))
    pts = np.array([sys.apply_word(word, mu) for mu in orbit], dtype=np.int64)
    ok = _zero_one(sys.pairings(pts))
    total = EhrhartPoly()
    for g in span_groups(sys):
        count = int(ok[:, list(g.root_ids)].all(axis=1).sum())
        if count:
            total = total + count * g.zonotope
    if any(c < 0 for c in total.terms.values()):
        raise InvariantViolation(f"negative coefficient in {total}")
    return total


def tr_conjecture_rhs(sys: RootSystem, lam) -> EhrhartPoly:
    """Sum of rvol(X) k^X over independent X whose span's roots pair with lam in {0, 1}."""
    ok = _zero_one(sys.pairings(lam))
    total = EhrhartPoly()
    for g in span_groups(sys):
        if ok[list(g.root_ids)].all():
            total = total + g.zonotope
    return total


def scan_domain(sys: RootSystem) -> list:
    """All weights whose dominant representative has every coordinate in {0, 1}."""
    out = set()
    for bits in np.ndindex(*([2] * sys.rank)):
        out |= sys.weyl_orbit(tuple(int(b) for b in bits))
    return sorted(out)


def group_by_coset(sys: RootSystem, weights) -> dict:
    """Map each coset's least dominant upper bound to the weights in that coset."""
    cosets = defaultdict(list)
    for w in weights:
        key = tuple(x % 1 for x in sys.root_coords(w))
        cosets[key].append(w)
    out = {}
    for members in cosets.values():
        doms = {sys.dominant_rep(w)[0] for w in members}
        out[join_dominant(sys, sorted(doms))] = sorted(members)
    return out


@dataclass
class CounterexampleReport:
    label: str
    lam: tuple
    lhs: object  # simulated truncated polynomial, value at k=1, or the failed fit
    rhs: object
    equal: bool


@dataclass
class ScanResult:
    label: str
    domain_size: int
    k1_only: bool
    reports: list = field(default_factory=list)

    @property
    def counterexamples(self) -> list:
        return [r for r in self.reports if not r.equal]


def counterexample_scan(sys: RootSystem, k1_only=False) -> ScanResult:
    """Compare simulated truncated fiber sizes with the conjectured formula.

    With ``k1_only`` only the value at k_l = k_s = 1 is compared, which needs
    one fiber table per coset instead of a full interpolation grid.
    """
    domain = scan_domain(sys)
    result = ScanResult(str(sys.label), len(domain), k1_only)
    for top, members in group_by_coset(sys, domain).items():
        if k1_only:
            table = fiber_table(sys, top, (1, 1), FiringMode.TRUNCATED)
            for lam in members:
                lhs, rhs = table[lam], tr_conjecture_rhs(sys, lam)(1, 1)
                result.reports.append(CounterexampleReport(str(sys.label), lam, lhs, rhs, lhs == rhs))
        else:
            polys = simulated_polys(sys, top, FiringMode.TRUNCATED, members)
            for lam in members:
                lhs, rhs = polys[lam], tr_conjecture_rhs(sys, lam)
                result.reports.append(CounterexampleReport(str(sys.label), lam, lhs, rhs, lhs == rhs))
    result.reports.sort(key=lambda r: r.lam)
    return result
