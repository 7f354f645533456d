import json

import pytest

from gmsplit import fixtures as F
from gmsplit.cli import config_from_args, main
from gmsplit.model import dumps


@pytest.fixture
def spec_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.json"
        path.write_text(dumps(F.ALL[name]()))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_defaults():
    cfg = config_from_args(["enumerate", "x.json"])
    assert (cfg.n_max, cfg.max_arcs, cfg.allow_tubes, cfg.json) == (12, 8, True, False)
    assert not config_from_args(["genus", "x.json", "--no-tubes"]).allow_tubes


def test_bounds_must_be_positive():
    with pytest.raises(SystemExit):
        config_from_args(["enumerate", "x.json", "--n-max", "0"])


def test_genus_single_vertex(capsys, spec_file):
    code, out, _ = run(capsys, "genus", spec_file("disk-two-fibers"))
    assert code == 0
    assert out.splitlines()[0] == "genus: 2"
    assert "pseudovertical" in out


def test_genus_equals_first_enumerated(capsys, spec_file):
    path = spec_file("pants-loop")
    _, out, _ = run(capsys, "genus", path, "--json")
    genus = json.loads(out)
    _, out, _ = run(capsys, "enumerate", path, "--json")
    ranked = json.loads(out)
    assert genus["witness"] == ranked["candidates"][0]
    assert genus["genus"] == 2


def test_amalgamate_inline(capsys):
    code, out, _ = run(capsys, "amalgamate", "[[-2,0],[-2]]")
    assert code == 0
    assert out.strip() == "chi: -4, genus: 3"


def test_amalgamate_from_file(capsys, tmp_path):
    path = tmp_path / "levels.json"
    path.write_text("[[-4, 0], [-2]]")
    code, out, _ = run(capsys, "amalgamate", str(path), "--json")
    assert code == 0
    assert json.loads(out) == {"chi": -6, "genus": 4}


def test_amalgamate_bad_levels(capsys):
    code, _, err = run(capsys, "amalgamate", '[["a"]]')
    assert code == 2 and err


def test_validate_det_two(capsys, tmp_path):
    doc = json.loads(dumps(F.pants_loop()))
    doc["edges"]["t"]["gluings"][0] = [[2, 0], [0, 1]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(path), "--json")
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]
    assert "gluing-not-unimodular" in [v["code"] for v in report["violations"]]


def test_validate_ok(capsys, spec_file):
    code, out, _ = run(capsys, "validate", spec_file("pants-loop"))
    assert code == 0 and "ok" in out


def test_io_and_parse_errors(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "enumerate", str(bad))
    assert code == 2 and err
    bad.write_text('{"format": "nope"}')
    code, _, err = run(capsys, "genus", str(bad))
    assert code == 2 and "unknown-format" in err


def test_enumerate_invalid_spec_exits_one(capsys, tmp_path):
    doc = json.loads(dumps(F.pants_loop()))
    doc["vertices"]["p"]["exterior"] = []
    path = tmp_path / "open.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "enumerate", str(path))
    assert code == 1 and "boundary-unmatched" in err


def test_cut_writes_files(capsys, spec_file, tmp_path):
    prefix = tmp_path / "piece"
    code, out, _ = run(capsys, "cut", spec_file("doubled-disk-two-fibers"), "--edge", "t", "-o", str(prefix))
    assert code == 0
    written = out.split()
    assert len(written) == 2
    for path in written:
        doc = json.loads(open(path).read())
        assert doc["edges"] == {}


def test_cut_to_stdout(capsys, spec_file):
    code, out, _ = run(capsys, "cut", spec_file("pants-loop"), "--edge", "t")
    assert code == 0
    (doc,) = json.loads(out)
    assert doc["vertices"]["p"]["exterior"] == [0, 1, 2]


def test_explain_ledger(capsys, spec_file):
    code, out, _ = run(capsys, "explain", spec_file("pants-loop"), "--json")
    assert code == 0
    doc = json.loads(out)
    assert sum(row[2] for row in doc["ledger"]) == doc["chi"]
    code, _, err = run(capsys, "explain", spec_file("pants-loop"), "--candidate", "999")
    assert code == 1 and "out of range" in err


def test_output_file(capsys, spec_file, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "enumerate", spec_file("solid-torus"), "--json", "-o", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["candidates"][0]["genus"] == 1


def test_enumerate_is_byte_identical(capsys, spec_file):
    path = spec_file("pants-loop")
    _, first, _ = run(capsys, "enumerate", path, "--json")
    _, second, _ = run(capsys, "enumerate", path, "--json")
    assert first == second
