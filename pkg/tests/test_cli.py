import json
import subprocess
import sys
from pathlib import Path

import pytest

from dcalc.cli import main

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

GALLERY_GOLDENS = {
    "prop2.6_n4": ["prop2.6", "--n", "4"],
    "alternating_n3": ["alternating", "--n", "3"],
    "cells_0_1_0": ["cells", "--a", "0,1,0"],
    "b12-trend_n9": ["b12-trend", "--n", "9"],
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_set_analyze(capsys):
    code, out, _ = run(capsys, "set", "analyze", str(DATA / "set_p3.json"), "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["index"] == 3 and rep["d_norm"] == "3"
    assert [p["part"] for p in rep["parts"]] == [["v0"], ["v2"]]


def test_set_decompose_text(capsys):
    code, out, _ = run(capsys, "set", "decompose", str(DATA / "set_p3.json"))
    assert code == 0
    assert "part_count: 2" in out


def test_fn_analyze(capsys):
    code, out, _ = run(capsys, "fn", "analyze", str(DATA / "alternating_p2.json"), "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["norms"]["d_norm"] == "5" and rep["norms"]["qd_norm"] == "4"
    assert rep["norms"]["b14_lower"] == "5/2"
    assert rep["index_table"] == [{"eps": "2", "index": 2, "eps_times_index": "4"}]


def test_fn_decompose(capsys):
    code, out, _ = run(capsys, "fn", "decompose", str(DATA / "alternating_p2.json"), "--json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [(r["u"], r["v"]) for r in rows] == [("3", "2"), ("1", "2"), ("1", "0")]


def test_space_validate_rejects_set_documents(capsys):
    code, out, _ = run(capsys, "space", "validate", str(DATA / "set_p3.json"))
    assert code == 2 and out == ""


def test_space_document_directly(capsys, tmp_path):
    doc = json.loads((DATA / "set_p3.json").read_text())["space"]
    p = tmp_path / "space.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "space", "validate", str(p))
    assert code == 0 and "height: 3" in out


def test_complex_function(capsys, tmp_path):
    doc = json.loads((DATA / "alternating_p2.json").read_text())
    doc["values"]["v0"] = [0, 1]
    p = tmp_path / "cx.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "fn", "analyze", str(p), "--json")
    rep = json.loads(out)
    assert code == 0 and rep["real"] is False
    assert rep["d_norm_bounds"]["flagged"] is True


@pytest.mark.parametrize(
    "text",
    ["{bad", "[]", '{"space": {"nodes": ["a"], "root": "a", "edges": []}, "members": ["zz"]}'],
)
def test_bad_input_exits_2_without_output(capsys, tmp_path, text):
    p = tmp_path / "in.json"
    p.write_text(text)
    code, out, err = run(capsys, "set", "analyze", str(p))
    assert code == 2 and out == "" and err


def test_missing_file(capsys, tmp_path):
    code, out, _ = run(capsys, "fn", "analyze", str(tmp_path / "nope.json"))
    assert code == 2 and out == ""


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "nosuchsuite"])
    assert exc.value.code == 2
    code, out, _ = run(capsys, "gallery", "prop2.6", "--n", "0")
    assert code == 2 and out == ""
    code, _, _ = run(capsys, "check", "norms", "--cases", "0")
    assert code == 2


def test_check_single_suite(capsys):
    code, out, _ = run(capsys, "check", "norms", "--cases", "1", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["failed"] == 0
    assert {r["suite"] for r in rep["results"]} == {"norms"}


def test_failed_gallery_exits_1(capsys, monkeypatch):
    from dcalc import cli

    monkeypatch.setitem(cli.GALLERIES, "cells", lambda a: ({"x": 1}, ["forced"]))
    code, out, err = run(capsys, "gallery", "cells")
    assert code == 1 and "x: 1" in out and "forced" in err


@pytest.mark.parametrize("name", sorted(GALLERY_GOLDENS))
@pytest.mark.parametrize("ext", ["txt", "json"])
def test_gallery_goldens(capsys, name, ext):
    argv = ["gallery", *GALLERY_GOLDENS[name]] + (["--json"] if ext == "json" else [])
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN / f"{name}.{ext}").read_text()


def test_stdin_and_entry_point():
    text = (DATA / "set_p3.json").read_text()
    res = subprocess.run(
        [sys.executable, "-m", "dcalc", "set", "analyze", "-", "--json"],
        input=text, capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["index"] == 3
