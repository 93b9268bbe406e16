import os
import subprocess
from pathlib import Path

import pytest

import lawvere_anick as la

FIXTURES = Path(os.environ.get("LAWVERE_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))
CLI = os.environ.get("LAWVERE_CLI")


def text(name):
    return (FIXTURES / name).read_text()


def test_check_fixtures():
    report = la.check(text("group.lwv"))
    assert report["certified"]
    assert report["degree"] == 2
    assert la.check(text("abelian.lwv"))["degree"] == 0


def test_chain_counts():
    assert la.chain_counts(text("abelian.lwv"), 3) == [1, 2, 2, 1]
    assert la.chain_counts(text("group.lwv"), 2) == [1, 3, 10]


def test_chain_json_shape():
    data = la.chains(text("abelian.lwv"), 2)
    cell = data["chains"][2]["cells"][0]
    assert cell["entries"][0]["terms"] == ["plus(x1,x2)"]
    assert cell["entries"][1] == {"context": ["X"], "terms": ["x1", "zero"]}


def test_group_homology_bound():
    h = la.homology(text("group.lwv"), 2)
    assert h["modulus"] == 2
    H = [g["H"] for g in h["homology"]]
    assert H[2]["rank"] - H[1]["rank"] + H[0]["rank"] == 0


def test_monoid_homology():
    assert la.monoid_homology(text("z2.srs"), 3) == ["Z", "Z/2", "0", "Z/2"]


def test_parse_errors_raise():
    with pytest.raises(la.LawvereError, match="variable-on-lhs-root"):
        la.check("sorts X\nvar x : X\nrule bad : x -> x\n")


def test_round_trip_is_stable():
    once = la.round_trip(text("group.lwv"))
    assert la.round_trip(once) == once


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
class TestCli:
    def test_exit_codes(self, tmp_path):
        assert run("check", FIXTURES / "group.lwv").returncode == 0
        assert run("chains", tmp_path / "missing.lwv", "--max-dim", 2).returncode == 1
        bad = tmp_path / "bad.lwv"
        bad.write_text("sorts X\nop f : X -> X\nop g : X -> X\nvar x : X\nrule a : f(g(x)) -> x\nrule b : g(x) -> f(x)\n")
        assert run("check", bad).returncode == 2
        loop = tmp_path / "loop.lwv"
        loop.write_text("sorts X\nop c : -> X\nop f : X -> X\nbudget term 20\nrule r : f(c) -> f(f(c))\n")
        assert run("check", loop).returncode == 3
        assert run("homology", FIXTURES / "group.lwv", "--max-dim", 2, "--coeff", "4").returncode == 4
        assert run("homology", FIXTURES / "group.lwv", "--max-dim", 2, "--coeff", "3").returncode == 4

    def test_chains_table(self):
        out = run("chains", FIXTURES / "abelian.lwv", "--max-dim", 3).stdout
        assert "dim 3: 1 chain" in out
        assert "(plus(x1,x2), <x1,zero>, <zero>)" in out

    def test_homology_report(self):
        out = run("homology", FIXTURES / "group.lwv", "--max-dim", 2).stdout
        assert "coefficients F2" in out
        assert "strong n=2" in out and "holds" in out

    def test_json_is_deterministic(self):
        a = run("homology", FIXTURES / "group.lwv", "--max-dim", 2, "--json").stdout
        b = run("homology", FIXTURES / "group.lwv", "--max-dim", 2, "--json").stdout
        assert a == b and '"version": 1' in a

    def test_reduce_output_is_certified(self, tmp_path):
        src = tmp_path / "dup.lwv"
        src.write_text(text("abelian.lwv") + "rule r3 : plus(zero, zero) -> zero\n")
        assert run("check", src).returncode == 2
        reduced = tmp_path / "reduced.lwv"
        reduced.write_text(run("reduce", src).stdout)
        assert run("check", reduced).returncode == 0
