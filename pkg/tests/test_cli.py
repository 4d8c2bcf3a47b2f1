"""CLI exit codes and JSON output."""

import json

import pytest

from jumploci.cli import main


@pytest.fixture
def pres_file(tmp_path):
    f = tmp_path / "z2.pres"
    f.write_text("gens: a b\nrels: [a,b]\n")
    return str(f)


@pytest.fixture
def graph_file(tmp_path):
    f = tmp_path / "p4.graph"
    f.write_text("vertices: a b c d\nedges:\na b\nb c\nc d\n")
    return str(f)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_resonance_json(capsys, pres_file):
    code, out = run(capsys, ["resonance", pres_file, "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["b1"] == 2 and d["components"] == []


def test_charvar_json(capsys, pres_file):
    code, out = run(capsys, ["charvar", pres_file, "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["b1"] == 2 and d["k"] == 1
    assert d["generators"]


def test_malcev_json(capsys, pres_file):
    code, out = run(capsys, ["malcev", pres_file, "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["graded_dims"] == [2, 0, 0, 0]


def test_obstruct_json_schema(capsys, pres_file):
    code, out = run(
        capsys, ["obstruct", pres_file, "--class", "projective", "--formal", "--json"]
    )
    assert code == 0
    d = json.loads(out)
    for key in ("input", "b1", "torsion", "checks", "components", "overall",
                "seed", "truncation_degree"):
        assert key in d, key
    assert d["overall"] in ("pass", "fail", "inconclusive")


def test_obstruct_graph(capsys, graph_file):
    code, out = run(
        capsys, ["obstruct", "--graph", graph_file, "--class", "quasiprojective", "--json"]
    )
    assert code == 0
    assert json.loads(out)["overall"] == "fail"


def test_raag(capsys, graph_file):
    code, out = run(capsys, ["raag", "--graph", graph_file, "--json"])
    assert code == 0
    assert json.loads(out)["realizable"] is False


def test_cover(capsys, pres_file):
    code, out = run(capsys, ["cover", pres_file, "--phi", "1,0", "--order", "3", "--json"])
    assert code == 0
    assert json.loads(out)["cover_b1"] == 2


def test_parse_error_exit_1(capsys, tmp_path):
    f = tmp_path / "bad.pres"
    f.write_text("gens a b\n")  # missing colon
    assert main(["resonance", str(f)]) == 1


def test_usage_error_exit_1(capsys):
    with_code = main(["obstruct", "--class", "affine"])
    assert with_code == 1


def test_missing_file_exit_1(capsys):
    assert main(["resonance", "/no/such/file.pres"]) == 1


def test_deterministic_output(capsys, pres_file):
    _, out1 = run(capsys, ["obstruct", pres_file, "--class", "projective", "--json"])
    _, out2 = run(capsys, ["obstruct", pres_file, "--class", "projective", "--json"])
    assert out1 == out2


def test_bad_graph_exit_1(capsys, tmp_path):
    f = tmp_path / "bad.graph"
    f.write_text("edges:\na b\n")  # missing vertices header
    assert main(["raag", "--graph", str(f)]) == 1
