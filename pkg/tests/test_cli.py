import dataclasses
import json

import pytest
from click.testing import CliRunner

from alcovekit import verify
from alcovekit.cli import main
from alcovekit.rootsys import build_root_system


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, list(args))

    return invoke


def doc(result):
    return json.loads(result.output)


def test_roots_a1(run):
    r = run("roots", "A1")
    assert r.exit_code == 0
    d = doc(r)
    assert d["command"] == "roots"
    assert d["input"] == {"type": "A1"}
    assert d["payload"]["roots"] == 2


def test_roots_g2_marks(run):
    d = doc(run("roots", "G2", "--json"))
    assert d["payload"]["marks"] == [3, 2]
    assert d["payload"]["positive_roots"] == 6


def test_roots_e8(run):
    p = doc(run("roots", "E8"))["payload"]
    assert p["roots"] == 240
    assert p["highest"] == [2, 3, 4, 6, 5, 4, 3, 2]


@pytest.mark.parametrize("args", [("roots", "Z9"), ("roots", "D3"), ("mu", "A2", "5"), ("ell", "A2", "--subset", "x"),
                                  ("cohomology", "A2", "--genus", "4", "--char", "6"), ("key2", "A3"),
                                  ("star", "A2", "--subset", "0,1,2"), ("elemtrans", "--trunc", "0")])
def test_usage_errors_exit_2(run, args):
    r = run(*args)
    assert r.exit_code == 2


def test_alcove_g2(run):
    p = doc(run("alcove", "G2"))["payload"]
    assert p["attachment"] == [2]
    assert [v["label"] for v in p["vertices"]] == [0, 1, 2]


def test_mu_and_quotients(run):
    assert doc(run("mu", "A2", "1"))["payload"]["mu"] == [[1, 0], [1, 1]]
    p = doc(run("quotients", "A1", "1"))["payload"]
    assert p["pi_side"] == [[1]] and p["h_side"] == [[-1]] and p["hyperspecial"] is True


def test_duality_and_census(run):
    r = run("duality", "D5")
    assert r.exit_code == 0
    assert doc(run("census", "E6"))["payload"]["count"] == 3


def test_facets_and_star(run):
    r = run("facets", "A2")
    assert r.exit_code == 0
    assert len(doc(r)["payload"]["facets"]) == 7
    r = run("star", "B3", "--subset", "0,1,3")
    assert r.exit_code == 0
    assert len(doc(r)["payload"]["members"]) == 8


def test_ell_and_key2(run):
    assert doc(run("ell", "E6"))["payload"]["ell"] == 6
    assert doc(run("ell", "E6", "--subset", "1,2,3,4,5"))["payload"]["ell"] == 1
    r = run("key2", "E8")
    assert r.exit_code == 0
    p = doc(r)["payload"]
    assert (p["r0_rank"], p["r1_rank"]) == (0, 1)


def test_cohomology_d4(run):
    r = run("cohomology", "D4", "--genus", "4", "--char", "0")
    assert r.exit_code == 0
    d = doc(r)
    assert d["payload"]["tangent"] == [0, 9, 0]
    assert d["payload"]["cotangent"] == [0, 1, 4]
    assert d["verified"] is True


def test_cohomology_sl2_gate(run):
    r = run("cohomology", "A1", "--genus", "4")
    assert r.exit_code == 0
    d = doc(r)
    assert d["verified"] is False
    assert d["payload"]["gate"]["genus_ok"] is False
    assert "tangent" not in d["payload"] and "cotangent" not in d["payload"]
    d = doc(run("cohomology", "A1", "--genus", "5", "--char", "7"))
    assert d["payload"]["tangent"] == [0, 12, 0]


def test_codim(run):
    assert doc(run("codim", "A1", "--genus", "5"))["payload"]["codim_bound"] == 4
    assert doc(run("codim", "A2", "--genus", "3"))["payload"]["codim_bound"] == 4


def test_elemtrans(run):
    r = run("elemtrans", "--trunc", "2", "--max-degree", "3", "--char", "3")
    assert r.exit_code == 0
    p = doc(r)["payload"]
    assert p["kernel_dimensions"] == {"0": 2, "1": 5, "2": 8, "3": 11}
    assert p["generators"] and p["syzygy"]


def test_table_output(run):
    r = run("roots", "B2", "--table")
    assert r.exit_code == 0
    assert any(line.startswith("payload.marks") for line in r.output.splitlines())


def test_verify_all_small(run):
    r = run("verify-all", "--max-rank", "2")
    assert r.exit_code == 0
    d = doc(r)
    assert d["payload"]["types"] == ["A1", "A2", "B2", "C2", "G2"]
    assert d["failures"] == []
    assert d["payload"]["passed"] == d["payload"]["checks"]


def test_deterministic_output(run):
    a = run("verify-all", "--max-rank", "3").output
    b = run("verify-all", "--max-rank", "3").output
    assert a == b
    assert run("facets", "C3").output == run("facets", "C3").output


def test_fault_injection_names_census(run, monkeypatch):
    real = verify.build_root_system

    def corrupted(t):
        rs = real(t)
        if t.label == "A2":
            return dataclasses.replace(rs, marks=(1, 2))
        return rs

    monkeypatch.setattr(verify, "build_root_system", corrupted)
    r = run("verify-all", "--max-rank", "2")
    assert r.exit_code == 1
    failures = doc(r)["failures"]
    assert any(f["check"] == "census" and f["type"] == "A2" for f in failures)
    # the cached root system itself is untouched
    assert build_root_system(verify.SimpleType("A", 2)).marks == (1, 1)
