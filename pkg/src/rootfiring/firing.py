"""Interval firing on weights.

A weight mu may fire the positive root alpha, moving to mu + alpha, when
``<mu, alpha^vee> + 1`` lies in an integer interval of radius k(alpha):

* symmetric mode: ``[-k, k]``
* truncated mode: ``[-k + 1, k]``

Both processes terminate and are confluent for good parameters, so every
weight has a well-defined stabilization.  The stable points are exactly the
weights ``eta_k(nu)`` (for symmetric firing, only those nu with no positive
root pairing to -1), which lets us label each fiber by nu.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NonPolynomialFit, StepLimit, UnmatchedStablePoint
from .permutohedra import DEFAULT_BOX_LIMIT, _encode, discrete_permutohedron
from .poly import interpolate, monomials
from .rootsys import DeformParam, RootSystem, as_param  # noqa: F401  (re-exported)

DEFAULT_STEP_LIMIT = 10**7


class FiringMode(enum.Enum):
    SYMMETRIC = "sym"
    TRUNCATED = "tr"

    @classmethod
    def parse(cls, value) -> "FiringMode":
        if isinstance(value, cls):
            return value
        text = str(value).lower()
        for mode in cls:
            if text in (mode.value, mode.name.lower()):
                return mode
        raise ValueError(f"unknown firing mode {value!r}")


def _interval(sys: RootSystem, k: DeformParam, mode: FiringMode):
    kv = sys.k_vector(k)
    lo = -kv if mode is FiringMode.SYMMETRIC else -kv + 1
    return lo, kv


def fireable_roots(sys: RootSystem, mu, k, mode) -> list:
    k = sys.check_param(k)
    mode = FiringMode.parse(mode)
    lo, hi = _interval(sys, k, mode)
    shifted = sys.pairings(mu) + 1
    ok = (shifted >= lo) & (shifted <= hi)
    return [sys.positive_roots[i] for i in np.flatnonzero(ok)]


def is_stable(sys: RootSystem, mu, k, mode) -> bool:
    return not fireable_roots(sys, mu, k, mode)


def stabilize(sys: RootSystem, mu, k, mode, step_limit=DEFAULT_STEP_LIMIT, rng=None) -> tuple:
    """Fire until stable.

    By default the fireable root of smallest index is fired.  Passing a
    ``random.Random`` as ``rng`` picks a uniformly random fireable root at
    each step instead, which is how confluence is tested.
    """
    k = sys.check_param(k)
    mode = FiringMode.parse(mode)
    lo, hi = _interval(sys, k, mode)
    cor, wts = sys.pos_coroots, sys.pos_weights
    cur = np.array(mu, dtype=np.int64)
    for _ in range(step_limit):
        shifted = cor @ cur + 1
        idx = np.flatnonzero((shifted >= lo) & (shifted <= hi))
        if len(idx) == 0:
            return tuple(int(x) for x in cur)
        i = idx[0] if rng is None else idx[rng.randrange(len(idx))]
        cur += wts[i]
    raise StepLimit(f"no stable point after {step_limit} fires from {mu}")


def stabilize_many(sys: RootSystem, pts, k, mode, step_limit=DEFAULT_STEP_LIMIT) -> np.ndarray:
    """Canonical stabilization of every row of ``pts`` at once."""
    k = sys.check_param(k)
    mode = FiringMode.parse(mode)
    lo, hi = _interval(sys, k, mode)
    cor_t, wts = sys.pos_coroots.T, sys.pos_weights
    P = np.array(pts, dtype=np.int64, copy=True).reshape(-1, sys.rank)
    active = np.arange(len(P))
    for _ in range(step_limit):
        shifted = P[active] @ cor_t + 1
        fire = (shifted >= lo) & (shifted <= hi)
        has = fire.any(axis=1)
        active = active[has]
        if len(active) == 0:
            return P
        P[active] += wts[fire[has].argmax(axis=1)]
    raise StepLimit(f"stabilization exceeded {step_limit} fires")


def admissible(sys: RootSystem, nu, mode) -> bool:
    return FiringMode.parse(mode) is FiringMode.TRUNCATED or not sys.forbidden_sym(nu)


def stable_label(sys: RootSystem, mu, k) -> tuple:
    """The nu with ``eta_k(nu) = mu``, for a stable point mu."""
    k = sys.check_param(k)
    mu = tuple(int(x) for x in mu)
    word = sys.dominant_rep(mu)[1]
    shift = sys.apply_word(word, sys.rho_k(k))
    nu = tuple(a - b for a, b in zip(mu, shift))
    if sys.eta(nu, k) != mu:
        raise UnmatchedStablePoint(f"{mu} is not of the form eta_k(nu)")
    return nu


def stable_points_check(sys: RootSystem, nu, k, mode) -> bool:
    """eta_k(nu) is stable exactly when nu is admissible for the mode."""
    stable = is_stable(sys, sys.eta(nu, k), k, mode)
    return stable == admissible(sys, nu, mode)


@dataclass
class FiberTable:
    lam_top: tuple
    k: DeformParam
    mode: FiringMode
    counts: dict  # target weight nu -> fiber size
    n_sources: int

    def __getitem__(self, nu):
        return self.counts.get(tuple(nu), 0)


def _label_table(sys, lam_top, mode, box_limit=DEFAULT_BOX_LIMIT):
    perm = discrete_permutohedron(sys, lam_top, box_limit)
    labels = [tuple(int(x) for x in p) for p in perm.points]
    labels = [nu for nu in labels if admissible(sys, nu, mode)]
    words = [sys.dominant_rep(nu)[1] for nu in labels]
    return labels, words


def fiber_table(sys: RootSystem, lam_top, k, mode, step_limit=DEFAULT_STEP_LIMIT,
                box_limit=DEFAULT_BOX_LIMIT, _labels=None) -> FiberTable:
    """Fiber sizes of the stabilization map for every target below lam_top.

    All sources of a fiber with target nu (nu dominant-below lam_top) lie in
    Pi^Q(lam_top + rho_k), so stabilizing that set and reading off labels
    gives every such fiber completely.
    """
    k = sys.check_param(k)
    mode = FiringMode.parse(mode)
    lam_top = tuple(int(x) for x in lam_top)
    labels, words = _labels or _label_table(sys, lam_top, mode, box_limit)
    rho_k = sys.rho_k(k)
    stable = np.array([[a + b for a, b in zip(nu, sys.apply_word(w, rho_k))]
                       for nu, w in zip(labels, words)], dtype=np.int64).reshape(-1, sys.rank)
    top = tuple(a + b for a, b in zip(lam_top, rho_k))
    sources = discrete_permutohedron(sys, top, box_limit).points
    results = stabilize_many(sys, sources, k, mode, step_limit)
    bound = int(max(np.abs(results).max(initial=0), np.abs(stable).max(initial=0))) + 1
    keys = _encode(stable, bound)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    rkeys = _encode(results, bound)
    pos = np.searchsorted(sorted_keys, rkeys)
    pos = np.minimum(pos, len(sorted_keys) - 1)
    hit = sorted_keys[pos] == rkeys if len(sorted_keys) else np.zeros(len(rkeys), bool)
    if not hit.all():
        bad = tuple(int(x) for x in results[np.flatnonzero(~hit)[0]])
        raise UnmatchedStablePoint(f"stable point {bad} has no label below {lam_top}")
    tally = np.bincount(order[pos], minlength=len(labels))
    counts = {nu: int(c) for nu, c in zip(labels, tally)}
    return FiberTable(lam_top, k, mode, counts, len(sources))


def sample_grid(sys: RootSystem):
    """Interpolation nodes and extra check nodes for polynomials of degree <= rank.

    Simply-laced: k = 0..n, checked at n + 1.  Otherwise a triangular grid
    ``{(a, b + 1) : a + b <= n}`` of good parameters (unisolvent for total
    degree n), checked at (0, 0) and (n + 1, 1).
    """
    n = sys.rank
    if sys.simply_laced:
        return [(k, k) for k in range(n + 1)], [(n + 1, n + 1)]
    fit = [(a, b + 1) for a in range(n + 1) for b in range(n + 1 - a)]
    return fit, [(0, 0), (n + 1, 1)]


def simulated_polys(sys: RootSystem, lam_top, mode, targets=None, step_limit=DEFAULT_STEP_LIMIT,
                    box_limit=DEFAULT_BOX_LIMIT) -> dict:
    """Fit fiber-size polynomials for many targets from shared fiber tables.

    Every target nu must satisfy ``dominant(nu) <= lam_top``.  Values of the
    returned dict are EhrhartPoly instances, or the NonPolynomialFit raised
    for that target when the samples admit no integer polynomial fit.
    """
    mode = FiringMode.parse(mode)
    lam_top = tuple(int(x) for x in lam_top)
    labels = _label_table(sys, lam_top, mode, box_limit)
    if targets is None:
        targets = [tuple(int(x) for x in p) for p in discrete_permutohedron(sys, lam_top, box_limit).points]
    targets = [tuple(int(x) for x in t) for t in targets]
    for nu in targets:
        if not sys.leq(sys.dominant_rep(nu)[0], lam_top):
            raise ValueError(f"target {nu} is not below {lam_top} in root order")
    fit, check = sample_grid(sys)
    tables = {}
    for kl, ks in fit + check:
        k = DeformParam(kl, ks)
        tables[(kl, ks)] = fiber_table(sys, lam_top, k, mode, step_limit, box_limit, _labels=labels)
    monos = monomials(sys.rank, not sys.simply_laced)
    out = {}
    for nu in targets:
        samples = {p: tables[p][nu] for p in fit}
        extra = {p: tables[p][nu] for p in check}
        try:
            out[nu] = interpolate(samples, monos, extra)
        except NonPolynomialFit as exc:
            out[nu] = exc
    return out


def simulated_poly(sys: RootSystem, lam, mode, step_limit=DEFAULT_STEP_LIMIT,
                   box_limit=DEFAULT_BOX_LIMIT):
    """Fiber-size polynomial of a single weight, raising NonPolynomialFit on failure."""
    lam = tuple(int(x) for x in lam)
    top = sys.dominant_rep(lam)[0]
    res = simulated_polys(sys, top, mode, [lam], step_limit, box_limit)[lam]
    if isinstance(res, NonPolynomialFit):
        raise res
    return res
