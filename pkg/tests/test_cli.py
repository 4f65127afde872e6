import io
import json

import pytest

from rootfiring.cli import encode, run
from rootfiring.poly import EhrhartPoly, parse_poly


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, (json.loads(out.getvalue()) if out.getvalue() else None), err.getvalue()


def test_roots():
    code, rep, _ = call("roots", "A1")
    assert code == 0
    assert rep["outputs"]["count"] == 2 and rep["system"] == "A1"
    assert set(rep) == {"command", "system", "inputs", "outputs", "version", "timing"}
    assert rep["timing"] is None


def test_timing_flag():
    code, rep, _ = call("roots", "G2", "--timing")
    assert code == 0 and isinstance(rep["timing"], float)


def test_poly_round_trip():
    code, rep, _ = call("poly", "B3", "--lambda", "1,0,0")
    assert code == 0
    p = EhrhartPoly.from_json(rep["outputs"]["poly"])
    assert p.format_diagonal() == "78k^2 + 36k + 6"
    assert rep["outputs"]["diagonal"] == "78k^2 + 36k + 6"


def test_poly_simulate_and_conjecture():
    _, sim, _ = call("poly", "G2", "--lambda", "1,0", "--mode", "tr", "--method", "simulate")
    _, conj, _ = call("poly", "G2", "--lambda", "1,0", "--mode", "tr", "--method", "conjecture")
    assert EhrhartPoly.from_json(sim["outputs"]["poly"]) == parse_poly("4k_l + 2k_s + 1")
    assert EhrhartPoly.from_json(conj["outputs"]["poly"]) == parse_poly("3k_l + 2k_s + 1")


def test_deterministic_sorted_output():
    out1, out2 = io.StringIO(), io.StringIO()
    run(["fiber-table", "B2", "--lambda", "1,1", "--k", "2,1"], out1, io.StringIO())
    run(["fiber-table", "B2", "--lambda", "1,1", "--k", "2,1"], out2, io.StringIO())
    assert out1.getvalue() == out2.getvalue()
    rep = json.loads(out1.getvalue())
    assert json.dumps(rep, sort_keys=True) == out1.getvalue().strip()
    assert sum(rep["outputs"]["fibers"].values()) == rep["outputs"]["sources"]


def test_stabilize_label():
    code, rep, _ = call("stabilize", "A1", "--mu", "0", "--k", "1")
    assert code == 0
    assert rep["outputs"] == {"stable": [2], "label": [1]}


def test_perm_count_formula_and_direct():
    code, rep, _ = call("perm-count", "B2", "--lambda", "1,0", "--k", "2,1", "--formula", "--direct")
    assert code == 0 and rep["outputs"]["formula"] == rep["outputs"]["direct"]


def test_minkowski():
    code, rep, _ = call("minkowski", "--vertices", "0,3;1,4;2,0", "--gens", "1,1", "--k", "3")
    assert code == 0
    assert rep["outputs"]["formula"] == rep["outputs"]["direct"] == 23


def test_verify_appendix_g2():
    code, rep, _ = call("verify", "appendix", "--system", "G2")
    assert code == 0
    assert rep["outputs"]["rows"][0]["max_by_node"] == ["3/2", "1/2"]


@pytest.mark.parametrize("argv", [
    ["roots", "C2"],
    ["roots", "X7"],
    ["poly", "B3", "--lambda", "1,0"],
    ["poly", "B3", "--lambda", "0,1,0", "--mode", "tr", "--method", "formula"],
    ["poly", "B3", "--lambda", "0,1,0", "--mode", "sym", "--method", "conjecture"],
    ["perm-count", "B3", "--lambda", "0,1,0", "--k", "1,0"],
    ["perm-count", "A2", "--lambda=-1,0"],
    ["nonsense"],
    [],
])
def test_usage_errors(argv):
    code, rep, err = call(*argv)
    assert code == 2 and rep is None and err


def test_resource_limit():
    code, _, err = call("perm-count", "B3", "--lambda", "1,0,0", "--box-limit", "2")
    assert code == 3 and "resource limit" in err


def test_step_limit_is_invariant_exit():
    code, _, _ = call("stabilize", "A3", "--mu=-6,0,0", "--k", "2", "--step-limit", "1")
    assert code == 4


def test_encode():
    from fractions import Fraction
    assert encode({"a": Fraction(3, 2), "b": (Fraction(2),)}) == {"a": "3/2", "b": ["2"]}


def test_verify_tables():
    code, rep, _ = call("verify", "tables")
    assert code == 0, rep["outputs"]["failed"]
    assert rep["outputs"]["failed"] == []
