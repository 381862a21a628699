import io
import json
import subprocess
import sys

import pytest

from edgeideals.cli import PROPERTIES, main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def last_json(out):
    return json.loads(out.strip().splitlines()[-1])


def test_ind(capsys):
    code, out, _ = run(["ind", "--spec", "2,2", "--s", "2"], capsys)
    assert code == 0
    assert last_json(out) == {"n": 4, "facets": [[0, 1], [2, 3]]}


def test_check_cm(capsys):
    code, out, _ = run(["check", "--property", "cm", "--field", "q", "--spec", "1,1,1,1", "--s", "2"], capsys)
    assert code == 0
    assert last_json(out)["value"] is True


def test_check_cm_witness(capsys):
    code, out, _ = run(["check", "--property", "cm", "--spec", "2,2", "--s", "2"], capsys)
    assert last_json(out)["witness"] == {"face": [], "degree": 0}


def test_betti_table(capsys):
    code, out, _ = run(["betti", "--spec", "2,2", "--s", "2", "--field", "q", "--json"], capsys)
    assert code == 0
    table = last_json(out)
    assert (table["(1,2)"], table["(2,3)"], table["(3,4)"]) == (4, 4, 1)


def test_betti_human_readable(capsys):
    code, out, _ = run(["betti", "--spec", "2,2", "--s", "2"], capsys)
    assert out.splitlines()[0].split() == ["0", "1", "2", "3"]


def test_classify(capsys):
    code, out, _ = run(["classify", "--spec", "1,1,2", "--s", "3", "--l", "2"], capsys)
    rep = last_json(out)
    assert code == 0
    assert rep["almost_ci"] and rep["seq_cm"] and not rep["gorenstein"]
    assert rep["l"] == 2


@pytest.mark.parametrize("prop", PROPERTIES)
def test_every_property_runs(prop, capsys):
    code, out, _ = run(["check", "--property", prop, "--spec", "1,1,2", "--s", "2"], capsys)
    assert code == 0
    assert isinstance(last_json(out)["value"], bool)


def test_homology_from_stdin(capsys, monkeypatch):
    payload = json.dumps({"n": 3, "facets": [[0, 1], [0, 2], [1, 2]]})
    code, out, _ = run(["homology", "--field", "f2"], capsys, payload, monkeypatch)
    assert code == 0
    assert last_json(out) == {"dims": {"-1": 0, "0": 0, "1": 1}}


def test_input_file(tmp_path, capsys):
    f = tmp_path / "h.json"
    f.write_text(json.dumps({"n": 4, "edges": [[0, 2], [0, 3], [1, 2], [1, 3]]}))
    code, out, _ = run(["tr", "--input", str(f)], capsys)
    assert last_json(out) == {"n": 4, "edges": [[0, 1], [2, 3]]}


def test_dual_of_ideal_and_complex(capsys, monkeypatch):
    code, out, _ = run(["dual"], capsys, json.dumps({"n": 3, "gens": [[0, 1, 2]]}), monkeypatch)
    assert last_json(out) == {"n": 3, "gens": [[0], [1], [2]]}
    code, out, _ = run(["dual"], capsys, json.dumps({"n": 4, "facets": [[0, 1], [2, 3]]}), monkeypatch)
    assert last_json(out)["facets"] == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_certify(capsys):
    code, out, _ = run(["certify", "--what", "vd", "--spec", "1,1,2", "--s", "3"], capsys)
    cert = last_json(out)
    assert cert["value"] and cert["certificate"]["vertex"] == 0
    code, out, _ = run(["certify", "--what", "chordal", "--spec", "2,2", "--s", "2"], capsys)
    cert = last_json(out)
    assert not cert["value"] and cert["failing_minor"]["edges"]
    code, out, _ = run(["certify", "--what", "shellable", "--spec", "1,1,3", "--s", "2"], capsys)
    assert last_json(out)["value"]


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        [],
        ["ind", "--spec", "1,1"],
        ["check", "--property", "nope", "--spec", "1,1", "--s", "2"],
        ["classify", "--spec", "1,x", "--s", "2"],
        ["classify", "--spec", "1,1", "--s", "3"],
        ["homology", "--spec", "1,1", "--s", "2", "--field", "fp:4"],
    ],
)
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_bad_json_is_usage_error(capsys, monkeypatch):
    assert run(["ind"], capsys, "[1, 2]", monkeypatch)[0] == 2
    assert run(["ind"], capsys, "not json", monkeypatch)[0] == 2


def test_cap_exit_code(capsys, monkeypatch):
    big = json.dumps({"n": 13, "facets": [[0]]})
    code, _, err = run(["betti"], capsys, big, monkeypatch)
    assert code == 3 and "cap" in err


def test_missing_file_is_resource_error(capsys):
    code, _, _ = run(["ind", "--input", "/nonexistent/h.json"], capsys)
    assert code == 3


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "edgeideals.cli", "ind", "--spec", "1,1,1", "--s", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["facets"] == [[0], [1], [2]]
