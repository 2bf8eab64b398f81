import json

import pytest

from hopfpairs import catalog as cat
from hopfpairs.cli import main
from hopfpairs.serialize import dumps, hopf_to_json


@pytest.fixture
def build(tmp_path):
    def _build(name, N=None):
        out = tmp_path / f"{name}-{N}.json"
        argv = ["catalog", "build", name, "--out", str(out)]
        if N is not None:
            argv += ["--N", str(N)]
        assert main(argv) == 0
        return out
    return _build


def _report(path):
    return json.loads(path.read_text())


def test_catalog_to_stdout(capsys):
    assert main(["catalog", "build", "taft", "--N", "2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["kind"] == "hopf" and obj["dim"] == 4


def test_unknown_catalog_entry():
    assert main(["catalog", "build", "nothing"]) == 2


def test_bad_catalog_parameter():
    assert main(["catalog", "build", "taft", "--N", "1"]) == 2


@pytest.mark.parametrize("name", ["group", "taft", "double-taft", "group-tensor", "simple-rep",
                                  "simple-module", "datum-a2", "datum-g2"])
def test_verify_catalog_files(build, tmp_path, name):
    src = build(name)
    out = tmp_path / "r.json"
    assert main(["verify", "--input", str(src), "--out", str(out)]) == 0
    rep = _report(out)
    assert rep["ok"] and rep["schema"] == 1
    assert rep["command"] == ["verify", "--input", str(src), "--out", str(out)]


def test_verify_broken_algebra(tmp_path):
    obj = hopf_to_json(cat.taft_algebra(2))
    obj["counit"][1] = {"conductor": 2, "num": [["1/1"]], "den": [["1/1"]]}
    src = tmp_path / "broken.json"
    src.write_text(dumps(obj))
    out = tmp_path / "r.json"
    assert main(["verify", "--input", str(src), "--out", str(out)]) == 1
    assert not _report(out)["ok"]


def test_verify_conductor_mismatch(tmp_path, capsys):
    obj = hopf_to_json(cat.taft_algebra(2))
    obj["field"]["conductor"] = 5
    src = tmp_path / "bad.json"
    src.write_text(dumps(obj))
    assert main(["verify", "--input", str(src)]) == 2
    assert "conductor" in capsys.readouterr().err


def test_missing_input_and_usage():
    assert main(["verify", "--input", "/nonexistent/file.json"]) == 2
    assert main(["verify"]) == 2
    assert main(["frobnicate"]) == 2


def test_lmodule_and_rmodule(build, tmp_path):
    src = build("double-taft", 2)
    for cmd in ("lmodule", "rmodule"):
        out = tmp_path / f"{cmd}.json"
        assert main([cmd, "--input", str(src), "--all-pairs", "--out", str(out)]) == 0
        rep = _report(out)
        assert rep["data"]["dims"] == [1, 2, 2, 1]
        assert rep["data"]["pairwise_distinct"]


def test_lmodule_single_pair(build, tmp_path):
    src = build("double-taft", 2)
    out = tmp_path / "l.json"
    assert main(["lmodule", "--input", str(src), "--rho", "0", "--chi", "1", "--out", str(out)]) == 0
    assert _report(out)["data"]["dim"] == 2
    assert main(["lmodule", "--input", str(src), "--rho", "7"]) == 2


def test_table_on_double(build, tmp_path):
    src = build("double-taft", 2)
    out = tmp_path / "t.json"
    assert main(["table", "--input", str(src), "--out", str(out)]) == 0
    rows = _report(out)["data"]["rows"]
    assert len(rows) == 4
    assert all(r["dim_L"] == r["dim_R"] == r["psi_rank"] for r in rows)


def test_table_on_plain_tensor(build, tmp_path):
    src = build("group-tensor", 2)
    out = tmp_path / "t.json"
    assert main(["table", "--input", str(src), "--out", str(out)]) == 0
    assert [r["dim_L"] for r in _report(out)["data"]["rows"]] == [1, 1, 1, 1]


def test_double_command(build, tmp_path):
    src = build("taft", 2)
    out, saved = tmp_path / "d.json", tmp_path / "saved.json"
    assert main(["double", "--input", str(src), "--save", str(saved), "--out", str(out)]) == 0
    assert _report(out)["data"]["dim"] == 16
    assert main(["verify", "--input", str(saved)]) == 0


def test_double_needs_hopf_file(build):
    assert main(["double", "--input", str(build("datum-a2"))]) == 2


def test_cartan_audit(build, tmp_path):
    out = tmp_path / "a.json"
    assert main(["cartan", "audit", "--input", str(build("counterexample")), "--out", str(out)]) == 1
    assert not _report(out)["data"]["verdicts"]["finite type"]
    assert main(["cartan", "audit", "--datum", str(build("datum-a2"))]) == 0
    assert main(["cartan", "audit", "--input", str(build("simple-rep", 3)), "--out", str(out)]) == 1
    data = _report(out)["data"]
    assert not data["verdicts"]["no q_i root of unity"]
    assert data["witnesses"]["counterexample"] is True


def test_cartan_audit_with_separate_rep(build, tmp_path):
    datum = build("simple-rep", 2)
    rep = build("simple-module", 2)
    assert main(["cartan", "audit", "--input", str(datum), "--no-rep"]) == 1
    assert main(["cartan", "audit", "--input", str(datum), "--rep", str(rep)]) == 1
    assert main(["cartan", "audit", "--input", str(datum), "--rep", str(build("simple-module", 3))]) == 2
    assert main(["cartan", "audit", "--input", str(datum), "--skew", "bad"]) == 2


def test_reports_are_byte_identical(build, tmp_path):
    src = build("double-taft", 2)
    out = tmp_path / "same.json"
    argv = ["table", "--input", str(src), "--out", str(out)]
    assert main(argv) == 0
    first = out.read_bytes()
    assert main(argv) == 0
    assert out.read_bytes() == first


def test_selftest_subset(tmp_path):
    out = tmp_path / "s.json"
    assert main(["selftest", "--only", "5,9", "--quiet", "--out", str(out)]) == 0
    assert sorted(_report(out)["checks"]) == ["5", "9"]
