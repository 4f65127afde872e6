"""Integer polynomials in the deformation parameters (k_l, k_s).

Simply-laced systems use only powers of k_l, so the same class serves both
the univariate and the bivariate case.  Evaluation with a single argument
sets k_l = k_s = k.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import comb

from .errors import NonPolynomialFit
from .exactla import solve


class EhrhartPoly:
    """Sparse polynomial ``sum c * k_l**a * k_s**b`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {(int(a), int(b)): int(c) for (a, b), c in (terms or {}).items() if c != 0}

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def univariate(cls, coeffs):
        """From coefficients ``[c0, c1, ...]`` of powers of k (stored on k_l)."""
        return cls({(d, 0): c for d, c in enumerate(coeffs)})

    def __add__(self, other):
        if isinstance(other, int):
            other = EhrhartPoly.constant(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return EhrhartPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, int):
            return EhrhartPoly({key: c * other for key, c in self.terms.items()})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return EhrhartPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = EhrhartPoly.constant(other)
        return isinstance(other, EhrhartPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, kl, ks=None):
        if ks is None:
            ks = kl
        return sum(c * kl**a * ks**b for (a, b), c in self.terms.items())

    def coeff(self, deg_l, deg_s=0) -> int:
        return self.terms.get((deg_l, deg_s), 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def is_univariate(self) -> bool:
        return all(b == 0 for _, b in self.terms)

    def diagonal(self) -> list:
        """Coefficients of p(k, k), lowest degree first."""
        out = [0] * (self.degree + 1)
        for (a, b), c in self.terms.items():
            out[a + b] += c
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0]), reverse=True)

    def format(self, univariate=None) -> str:
        """Human-readable form, e.g. ``4k_l + 2k_s + 1`` or ``87k^3 + 9k + 1``."""
        if univariate is None:
            univariate = self.is_univariate()
        if not self.terms:
            return "0"
        pieces = []
        for (a, b), c in self.sorted_terms():
            if univariate:
                mono = "" if a == 0 else ("k" if a == 1 else f"k^{a}")
            else:
                parts = []
                for name, e in (("k_l", a), ("k_s", b)):
                    if e == 1:
                        parts.append(name)
                    elif e > 1:
                        parts.append(f"{name}^{e}")
                mono = "".join(parts)
            num = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            pieces.append(("-" if c < 0 else "+", num + mono))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def format_diagonal(self) -> str:
        return EhrhartPoly.univariate(self.diagonal()).format(univariate=True)

    def __repr__(self):
        return f"EhrhartPoly({self.format()!r})"

    __str__ = format

    # JSON ------------------------------------------------------------------

    def to_json(self) -> dict:
        terms = sorted(self.terms.items(), reverse=True)
        return {"vars": ["kl", "ks"],
                "terms": [{"kl": a, "ks": b, "coeff": c} for (a, b), c in terms]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(t["kl"], t["ks"]): t["coeff"] for t in data["terms"]})


def monomials(degree: int, bivariate: bool):
    if not bivariate:
        return [(d, 0) for d in range(degree + 1)]
    return [(a, t - a) for t in range(degree + 1) for a in range(t + 1)]


def interpolate(samples: dict, monos, check: dict = None) -> EhrhartPoly:
    """Fit integer coefficients for ``monos`` through ``samples`` exactly.

    ``samples`` maps ``(k_l, k_s)`` to values and must contain exactly as many
    points as there are monomials, forming a unisolvent set.  Extra points in
    ``check`` must be reproduced by the fit.
    """
    pts = sorted(samples)
    if len(pts) != len(monos):
        raise ValueError("need one sample per monomial")
    A = [[Fraction(kl) ** a * Fraction(ks) ** b for a, b in monos] for kl, ks in pts]
    sol = solve(A, [samples[p] for p in pts])
    if any(x.denominator != 1 for x in sol):
        raise NonPolynomialFit(f"non-integer coefficients {sol}", samples)
    p = EhrhartPoly({m: int(x) for m, x in zip(monos, sol)})
    for (kl, ks), value in (check or {}).items():
        if p(kl, ks) != value:
            raise NonPolynomialFit(
                f"fit {p} predicts {p(kl, ks)} at {(kl, ks)} but sample is {value}",
                {**samples, **check})
    return p


def reciprocity_eval(p: EhrhartPoly, at: int) -> int:
    return p(at, at)


def hstar_numerator(p, denom_power: int) -> list:
    """Numerator h(z) with ``sum_k p(k) z^k = h(z) / (1-z)**denom_power``.

    ``p`` is an EhrhartPoly (evaluated on the diagonal) or a callable.  The
    result lists coefficients from the constant term upward.
    """
    D = denom_power
    values = [p(k) for k in range(D)]
    h = []
    for i in range(D):
        h.append(sum((-1) ** j * comb(D, j) * values[i - j] for j in range(i + 1)))
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    return h


def format_zpoly(coeffs) -> str:
    """Format ``[24, -6, -6]`` as ``-6z^2 - 6z + 24``."""
    p = EhrhartPoly.univariate(coeffs)
    return p.format(univariate=True).replace("k", "z")


_TERM = re.compile(r"^(\d*)((?:k(?:_l|_s)?(?:\^\d+)?)*)$")
_FACTOR = re.compile(r"k(_l|_s)?(?:\^(\d+))?")


def parse_poly(text: str) -> EhrhartPoly:
    """Inverse of :meth:`EhrhartPoly.format`.

    Bare ``k`` means the diagonal variable and is stored on k_l, so
    ``parse_poly("87k^3 + 1")`` equals ``EhrhartPoly.univariate([1, 0, 0, 87])``.
    """
    body = text.replace(" ", "").replace("-", "+-")
    terms = {}
    for chunk in filter(None, body.split("+")):
        sign = -1 if chunk.startswith("-") else 1
        chunk = chunk.lstrip("-")
        m = _TERM.match(chunk)
        if not m or not chunk:
            raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        a = b = 0
        for var, exp in _FACTOR.findall(m.group(2)):
            e = int(exp) if exp else 1
            if var == "_s":
                b += e
            else:
                a += e
        terms[(a, b)] = terms.get((a, b), 0) + sign * coeff
    return EhrhartPoly(terms)
