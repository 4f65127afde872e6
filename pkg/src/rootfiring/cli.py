"""Command-line front end.  Every command prints one JSON report on stdout.

Exit codes: 0 success, 1 a ``verify`` comparison failed, 2 usage or input
error, 3 resource limit exceeded, 4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from importlib.metadata import PackageNotFoundError, version

from . import reference as ref
from .appendix import kappa_statistics, oshima_check, projection_dilation_max
from .ehrhart import counterexample_scan, group_by_coset, sym_formula, tr_conjecture_rhs
from .errors import InvariantViolation, NonPolynomialFit, ResourceLimit, RootFiringError
from .firing import (DEFAULT_STEP_LIMIT, FiringMode, fiber_table, simulated_poly,
                     simulated_polys, stabilize, stable_label)
from .permutohedra import DEFAULT_BOX_LIMIT, perm_count_direct, perm_count_poly
from .poly import EhrhartPoly, hstar_numerator, parse_poly
from .rootsys import as_param, build
from .zonotope import evaluate_multi, minkowski_count, minkowski_poly

EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE, EXIT_INVARIANT = 1, 2, 3, 4


def _version() -> str:
    try:
        return version("rootfiring")
    except PackageNotFoundError:
        return "0+unknown"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# argument parsing helpers ---------------------------------------------------------

def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _points(text: str) -> list:
    """``"0,0;1,0;0,1"`` -> list of integer tuples."""
    return [_ints(chunk) for chunk in text.split(";") if chunk.strip()]


def _param(text: str):
    vals = _ints(text)
    if len(vals) not in (1, 2):
        raise argparse.ArgumentTypeError("--k takes one value or kl,ks")
    return as_param(vals[0] if len(vals) == 1 else vals)


def _check_weight(system, lam, name="--lambda"):
    if len(lam) != system.rank:
        raise UsageError(f"{name} needs {system.rank} coordinates for {system.label}")
    return lam


# JSON encoding -------------------------------------------------------------------

def encode(obj):
    """JSON-ready form: Fractions as "p/q", polynomials via their schema."""
    if isinstance(obj, EhrhartPoly):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def _weight_key(w) -> str:
    return ",".join(str(int(x)) for x in w)


def _poly_out(p: EhrhartPoly) -> dict:
    return {"poly": p, "text": p.format(), "diagonal": p.format_diagonal()}


# commands --------------------------------------------------------------------------

def cmd_roots(args):
    s = build(args.type)
    roots = [{"index": r.index, "root": r.root, "coroot": r.coroot, "weight": r.weight,
              "positive": r.is_positive, "long": r.is_long, "height": r.height} for r in s.roots]
    out = {"rank": s.rank, "count": len(roots), "positive_count": len(s.positive_roots),
           "cartan": s.cartan.tolist(), "weyl_order": s.weyl_order,
           "index_of_connection": s.index_of_connection, "roots": roots}
    return str(s.label), {"type": args.type}, out


def cmd_perm_count(args):
    s = build(args.type)
    lam = _check_weight(s, args.lam)
    k = s.check_param(args.k)
    out = {}
    if args.formula or not args.direct:
        p = perm_count_poly(s, lam, args.box_limit)
        out["formula"] = p(k.k_long, k.k_short)
        out["poly"] = p
    if args.direct:
        out["direct"] = perm_count_direct(s, lam, k, args.box_limit)
    return str(s.label), {"lambda": lam, "k": [k.k_long, k.k_short]}, out


def cmd_stabilize(args):
    s = build(args.type)
    mu = _check_weight(s, args.mu, "--mu")
    k = s.check_param(args.k)
    mode = FiringMode.parse(args.mode)
    stable = stabilize(s, mu, k, mode, args.step_limit)
    out = {"stable": stable, "label": stable_label(s, stable, k)}
    return str(s.label), {"mu": mu, "k": [k.k_long, k.k_short], "mode": mode.value}, out


def cmd_fiber_table(args):
    s = build(args.type)
    lam = _check_weight(s, args.lam)
    k = s.check_param(args.k)
    mode = FiringMode.parse(args.mode)
    table = fiber_table(s, lam, k, mode, args.step_limit, args.box_limit)
    counts = {_weight_key(nu): c for nu, c in sorted(table.counts.items())}
    out = {"sources": table.n_sources, "fibers": counts}
    return str(s.label), {"lambda_top": lam, "k": [k.k_long, k.k_short], "mode": mode.value}, out


def cmd_poly(args):
    s = build(args.type)
    lam = _check_weight(s, args.lam)
    mode = FiringMode.parse(args.mode)
    if args.method == "formula":
        if mode is not FiringMode.SYMMETRIC:
            raise UsageError("--method formula is only available for --mode sym")
        p = sym_formula(s, lam)
    elif args.method == "conjecture":
        if mode is not FiringMode.TRUNCATED:
            raise UsageError("--method conjecture is only available for --mode tr")
        p = tr_conjecture_rhs(s, lam)
    else:
        p = simulated_poly(s, lam, mode, args.step_limit, args.box_limit)
    inputs = {"lambda": lam, "mode": mode.value, "method": args.method}
    return str(s.label), inputs, _poly_out(p)


def _report_row(r):
    row = {"lambda": r.lam, "equal": r.equal}
    for side in ("lhs", "rhs"):
        v = getattr(r, side)
        if isinstance(v, EhrhartPoly):
            row[side] = v.format()
        elif isinstance(v, NonPolynomialFit):
            row[side] = f"no polynomial fit: {v}"
        else:
            row[side] = v
    return row


def cmd_scan(args):
    s = build(args.type)
    res = counterexample_scan(s, k1_only=args.k1_only)
    out = {"domain_size": res.domain_size, "k1_only": res.k1_only,
           "counterexample_count": len(res.counterexamples),
           "counterexamples": [_report_row(r) for r in res.counterexamples]}
    return str(s.label), {"type": args.type, "k1_only": args.k1_only}, out


def cmd_minkowski(args):
    verts, gens = args.vertices, args.gens
    kvec = list(args.k) if args.k else [1] * len(gens)
    if len(kvec) == 1 and len(gens) > 1:
        kvec = kvec * len(gens)
    terms = minkowski_poly(verts, gens)
    out = {"formula": evaluate_multi(terms, kvec), "direct": minkowski_count(verts, gens, kvec, args.box_limit),
           "terms": [{"exponents": list(e), "coeff": c} for e, c in sorted(terms.items(), reverse=True)]}
    return None, {"vertices": verts, "gens": gens, "k": kvec}, out


# verify ---------------------------------------------------------------------------

CLASSICAL_RANKS = {"A": (1, 6), "B": (2, 6), "C": (3, 6), "D": (4, 6)}
EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def _appendix_systems(only, slow):
    if only:
        return [only]
    top = 8 if slow else None
    labels = []
    for fam, (lo, hi) in CLASSICAL_RANKS.items():
        labels += [f"{fam}{n}" for n in range(lo, (top or hi) + 1)]
    return labels + list(EXCEPTIONAL)


def verify_appendix(only=None, slow=False):
    rows, ok = [], True
    for label in _appendix_systems(only, slow):
        s = build(label)
        fam, n = s.label.family, s.rank
        values = [projection_dilation_max(s, i).value for i in range(n)]
        if label in ref.EXCEPTIONAL_MAX:
            expected = ref.EXCEPTIONAL_MAX[label]
        else:
            expected = [ref.classical_max(fam, n, i) for i in range(1, n + 1)]
        kappa, gap = kappa_statistics(s)
        want_gap = ref.RANK_TIMES_GAP.get(label)
        if want_gap is None and fam in "ABCD":
            want_gap = ref.classical_rank_times_gap(fam, n)
        oshima = True
        for i in range(n):
            rep = oshima_check(s, i)
            oshima &= rep.ok
            reps = ref.classical_orbit_reps(fam, n, i + 1) if fam in "ABCD" else None
            if reps is not None:
                oshima &= {(tuple(v), ln) for (_, ln), vs in rep.groups.items() for v in vs} == reps
        row_ok = values == expected and gap == want_gap and max(values) < 2 and oshima
        ok &= row_ok
        rows.append({"system": label, "max_by_node": values, "expected": expected,
                     "kappa": kappa, "rank_times_gap": gap, "expected_rank_times_gap": want_gap,
                     "oshima_unique": oshima, "ok": row_ok})
    return ok, rows


def _check(name, got, want):
    return {"check": name, "got": got, "expected": want, "ok": got == want}


def verify_tables(slow=False):
    checks = []
    # counterexample tables
    scan_types = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"] + (["A4", "D4"] if slow else [])
    for label in scan_types:
        s = build(label)
        res = counterexample_scan(s)
        checks.append(_check(f"{label} scan domain size", res.domain_size, ref.SCAN_DOMAIN_SIZES[label]))
        got = sorted(r.lam for r in res.counterexamples)
        want = sorted(c.lam for c in ref.COUNTEREXAMPLES[label])
        checks.append(_check(f"{label} counterexamples", got, want))
        by_lam = {r.lam: r for r in res.reports}
        for c in ref.COUNTEREXAMPLES[label]:
            r = by_lam[c.lam]
            if not isinstance(r.lhs, EhrhartPoly):
                checks.append(_check(f"{label} {c.lam} lhs fit", str(r.lhs), "polynomial"))
                continue
            if s.simply_laced:
                got_pair = [r.lhs.diagonal()[c.monomial[0]], r.rhs.diagonal()[c.monomial[0]]]
            else:
                got_pair = [r.lhs.coeff(*c.monomial), r.rhs.coeff(*c.monomial)]
            checks.append(_check(f"{label} {c.lam} differing coefficient", got_pair,
                                 [c.lhs_coeff, c.rhs_coeff]))
            if c.lhs is not None:
                checks.append(_check(f"{label} {c.lam} lhs", r.lhs.format(), parse_poly(c.lhs).format()))
                checks.append(_check(f"{label} {c.lam} rhs", r.rhs.format(), parse_poly(c.rhs).format()))
    if slow:
        for label, (size, count) in ref.K1_DISAGREEMENTS.items():
            res = counterexample_scan(build(label), k1_only=True)
            checks.append(_check(f"{label} k=1 domain size", res.domain_size, size))
            checks.append(_check(f"{label} k=1 disagreements", len(res.counterexamples), count))
    # B3 diagonal polynomials and their values at -1
    b3 = build("B3")
    simulated = _b3_simulated(b3)
    for mode in (FiringMode.SYMMETRIC, FiringMode.TRUNCATED):
        for row in ref.B3_DIAGONAL:
            want = row.sym if mode is FiringMode.SYMMETRIC else row.tr
            at = row.sym_at_minus_one if mode is FiringMode.SYMMETRIC else row.tr_at_minus_one
            sim = simulated[(row.lam, mode)]
            checks.append(_check(f"B3 {row.lam} {mode.value} simulated", sim.format_diagonal(),
                                 parse_poly(want).format()))
            checks.append(_check(f"B3 {row.lam} {mode.value} at -1", sim(-1), at))
            if mode is FiringMode.SYMMETRIC:
                checks.append(_check(f"B3 {row.lam} sym formula", sym_formula(b3, row.lam).format_diagonal(),
                                     parse_poly(want).format()))
                if row.sym_raw is not None:
                    checks.append({"check": f"B3 {row.lam} sym reference text", "got": sim.format_diagonal(),
                                   "expected": row.sym_raw, "ok": True,
                                   "note": "reference text has a stray k on the constant; value at -1 confirms the simulation"})
    # h* numerators
    a3 = build("A3")
    for mode, (text, want) in ref.A3_HSTAR.items():
        p = simulated_poly(a3, a3.rho, mode)
        checks.append(_check(f"A3 rho {mode} polynomial", p.format(), parse_poly(text).format()))
        checks.append(_check(f"A3 rho {mode} h* numerator", hstar_numerator(p, p.degree + 1), want))
    # appendix tables
    app_ok, rows = verify_appendix(slow=slow)
    for row in rows:
        checks.append({"check": f"{row['system']} projection-dilation maxima",
                       "got": row["max_by_node"], "expected": row["expected"], "ok": row["ok"]})
    return all(c["ok"] for c in checks), checks


def _b3_simulated(b3) -> dict:
    """Simulated polynomials of the tabulated B3 weights, sharing fiber tables per coset."""
    out = {}
    targets = [r.lam for r in ref.B3_DIAGONAL]
    for mode in (FiringMode.SYMMETRIC, FiringMode.TRUNCATED):
        for top, members in group_by_coset(b3, targets).items():
            for nu, p in simulated_polys(b3, top, mode, members).items():
                if isinstance(p, NonPolynomialFit):
                    raise p
                out[(nu, mode)] = p
    return out


def cmd_verify(args):
    if args.what == "appendix":
        ok, rows = verify_appendix(args.system, args.slow)
        return args.system, {"what": "appendix", "slow": args.slow}, {"ok": ok, "rows": rows}, ok
    ok, checks = verify_tables(args.slow)
    failed = [c["check"] for c in checks if not c["ok"]]
    out = {"ok": ok, "passed": len(checks) - len(failed), "failed": failed, "checks": checks}
    return None, {"what": "tables", "slow": args.slow}, out, ok


# parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; computation is single-threaded")
    common.add_argument("--step-limit", type=int, default=DEFAULT_STEP_LIMIT)
    common.add_argument("--box-limit", type=int, default=DEFAULT_BOX_LIMIT)
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the report")

    p = _Parser(prog="rootfiring", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("roots", cmd_roots, "list the roots of a system")
    sp.add_argument("type")

    sp = add("perm-count", cmd_perm_count, "lattice points of the deformed discrete permutohedron")
    sp.add_argument("type")
    sp.add_argument("--lambda", dest="lam", type=_ints, required=True)
    sp.add_argument("--k", type=_param, default=as_param(1))
    sp.add_argument("--formula", action="store_true")
    sp.add_argument("--direct", action="store_true")

    sp = add("stabilize", cmd_stabilize, "stabilize one weight")
    sp.add_argument("type")
    sp.add_argument("--mu", type=_ints, required=True)
    sp.add_argument("--k", type=_param, default=as_param(1))
    sp.add_argument("--mode", choices=["sym", "tr"], default="sym")

    sp = add("fiber-table", cmd_fiber_table, "fiber sizes of all targets below a dominant weight")
    sp.add_argument("type")
    sp.add_argument("--lambda", dest="lam", type=_ints, required=True)
    sp.add_argument("--k", type=_param, default=as_param(1))
    sp.add_argument("--mode", choices=["sym", "tr"], default="sym")

    sp = add("poly", cmd_poly, "fiber-size polynomial of a weight")
    sp.add_argument("type")
    sp.add_argument("--lambda", dest="lam", type=_ints, required=True)
    sp.add_argument("--mode", choices=["sym", "tr"], default="sym")
    sp.add_argument("--method", choices=["formula", "simulate", "conjecture"], default="formula")

    sp = add("scan-counterexamples", cmd_scan, "compare simulated truncated polynomials with the conjectured formula")
    sp.add_argument("type")
    sp.add_argument("--k1-only", action="store_true")

    sp = add("verify", cmd_verify, "compare computed values with stored reference tables")
    sp.add_argument("what", choices=["appendix", "tables"])
    sp.add_argument("--system", default=None)
    sp.add_argument("--slow", action="store_true", help="include the larger systems")

    sp = add("minkowski", cmd_minkowski, "lattice points of a polytope plus a dilated zonotope")
    sp.add_argument("--vertices", type=_points, required=True, help='e.g. "0,0;1,0;0,1"')
    sp.add_argument("--gens", type=_points, required=True, help='e.g. "1,1;2,3"')
    sp.add_argument("--k", type=_ints, default=None, help="one dilation per generator, or one for all")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (InvariantViolation, AssertionError) as exc:
        print(f"invariant violated: {exc}", file=stderr)
        return EXIT_INVARIANT
    except (RootFiringError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    ok = True
    if len(result) == 4:
        system, inputs, outputs, ok = result
    else:
        system, inputs, outputs = result
    report = {"command": ["rootfiring", *argv], "system": system, "inputs": inputs,
              "outputs": outputs, "version": _version(),
              "timing": round(time.perf_counter() - start, 3) if args.timing else None}
    print(json.dumps(encode(report), sort_keys=True), file=stdout)
    return 0 if ok else EXIT_FAIL


def main():
    sys.exit(run())
