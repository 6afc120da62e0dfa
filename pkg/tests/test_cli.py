from __future__ import annotations

import json

import pytest

from sievekit.cli import main, parse_sqrt2
from sievekit.qcalc import CycInt


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dissect_json_and_cache(capsys, tmp_path):
    args = ["dissect", "enumerate", "--mu", "1,1", "--cache-dir", str(tmp_path)]
    code, out, _ = run(capsys, *args)
    first = json.loads(out)
    assert code == 0
    assert first["result"]["count"] == 5
    assert first["manifest"]["cache"] == "miss"
    code, out, _ = run(capsys, *args)
    second = json.loads(out)
    assert second["manifest"]["cache"] == "hit"
    assert second["result"] == first["result"]
    assert second["manifest"]["digest"] == first["manifest"]["digest"]


def test_no_cache(capsys, tmp_path):
    args = ["dissect", "enumerate", "--mu", "2", "--cache-dir", str(tmp_path), "--no-cache"]
    run(capsys, *args)
    _, out, _ = run(capsys, *args)
    assert json.loads(out)["manifest"]["cache"] == "miss"
    assert not any(tmp_path.iterdir())


def test_csp_flag(capsys):
    code, out, _ = run(capsys, "dissect", "enumerate", "--mu", "2,0,1", "--csp", "--limit", "0")
    assert code == 0 and json.loads(out)["result"]["csp"]["ok"]


def test_punctured_counts(capsys):
    code, out, _ = run(capsys, "punctured", "enumerate", "--n", "15", "--m", "3",
                       "--spokes", "3", "--limit", "1")
    res = json.loads(out)["result"]
    assert code == 0 and res["count"] == 360 and res["with_spoke_v0"] == 72


def test_frieze_from_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"n": 6, "diagonals": [[0, 2], [2, 5], [3, 5]]}))
    code, out, _ = run(capsys, "frieze", "--from", str(path), "--format", "text")
    assert code == 0 and "1  3  2  1  3  2" in out


def test_frieze_quiddity(capsys):
    code, out, _ = run(capsys, "frieze", "--quiddity", "1,2+√2,2+2√2")
    assert code == 0 and json.loads(out)["result"]["growth"] == "3+3√2"


def test_parse_sqrt2():
    s2 = CycInt.lam(4, 8)
    assert parse_sqrt2("2+2√2") == 2 + 2 * s2
    assert parse_sqrt2("-r2") == -s2
    assert parse_sqrt2("5") == 5


def test_dyck_bad_word_is_usage_error(capsys):
    code, _, err = run(capsys, "dyck", "--m", "2", "--word", "URRR")
    assert code == 2 and "prefix" in err


def test_csp_failure_witness_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "csp", "--family", "punctured", "--n", "12", "--m", "3", "--s", "1")
    run_ = json.loads(out)["result"]["runs"][0]
    assert code == 0 and run_["predicted"] is False and not run_["ok"]


def test_stanton_printed_fails(capsys):
    assert run(capsys, "stanton", "--n", "12", "--k", "3")[0] == 0
    assert run(capsys, "stanton", "--n", "12", "--k", "3", "--b", "printed")[0] == 1


def test_stanton_coefficient_file(capsys, tmp_path):
    path = tmp_path / "b.json"
    path.write_text("[2, 4, 6]")
    code, out, _ = run(capsys, "stanton", "--n", "9", "--k", "3", "--b", str(path))
    assert code == 0


def test_orbifold(capsys, tmp_path):
    path = tmp_path / "o.json"
    path.write_text(json.dumps({"n": 6, "diagonals": [[0, 3], [0, 2], [3, 5]]}))
    code, out, _ = run(capsys, "orbifold", "--p", "2", "--triangulation", str(path))
    assert code == 0 and json.loads(out)["result"]["table"][1] == ["2", "5", "1"]


@pytest.mark.parametrize("name", ["dyck-figure", "orbifold-tables", "hexagon-classes"])
def test_repro_targets(capsys, name):
    code, out, _ = run(capsys, "repro", name)
    assert code == 0 and json.loads(out)["result"][name]["matches"]


def test_usage_errors(capsys):
    assert run(capsys, "repro", "nope")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "punctured", "enumerate", "--n", "5", "--m", "2", "--spokes", "1")[0] == 2
    assert run(capsys, "frieze")[0] == 2
