import json

import pytest

from grassmann_weights.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_weights_json(capsys):
    code, out, _ = run(capsys, "weights", "--m", "4", "--q", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert [r["d"] for r in doc["weights"]] == ["16", "24", "28", "32", "34", "35"]
    assert doc["n"] == "35" and doc["k"] == "6"
    assert doc["large_q_heuristic"] is False


def test_weights_trivial_code(capsys):
    code, out, _ = run(capsys, "weights", "--m", "2", "--q", "5", "--format", "json")
    assert code == 0
    assert [r["d"] for r in json.loads(out)["weights"]] == ["1"]


def test_weights_both_methods_large_q(capsys):
    code, out, _ = run(capsys, "weights", "--m", "9", "--q", "101", "--method", "both", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["large_q_heuristic"] is False
    assert all(r["d_exact"] == r["d_lr"] == r["d"] for r in doc["weights"])


def test_lr_small_q_is_flagged(capsys):
    _, out, _ = run(capsys, "weights", "--m", "5", "--q", "2", "--method", "lr", "--format", "json")
    assert json.loads(out)["large_q_heuristic"] is True


def test_weights_csv_and_text(capsys):
    _, out, _ = run(capsys, "weights", "--m", "4", "--q", "2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("i,d,")
    assert lines[1].startswith("1,16,")
    _, out, _ = run(capsys, "weights", "--m", "4", "--q", "2")
    assert "n=35" in out


@pytest.mark.parametrize("m, extra", [("3", []), ("4", []), ("5", ["--max-r", "2"])])
def test_verify_passes(capsys, m, extra):
    code, out, _ = run(capsys, "verify", "--m", m, "--q", "2", "--format", "json", *extra)
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass" and doc["diff"] == []
    assert doc["oracle_weights"] == doc["engine_weights"]


def test_verify_budget_exit(capsys):
    code, out, _ = run(capsys, "verify", "--m", "4", "--q", "2", "--budget", "100", "--format", "json")
    assert code == 3
    doc = json.loads(out)
    assert doc["status"] == "budget_exceeded"
    assert doc["first_infeasible_r"] == "2"
    assert doc["partial_weights"] == ["16"]


def test_usage_errors(capsys):
    assert run(capsys, "weights", "--m", "4")[0] == 2
    assert run(capsys, "weights", "--m", "1", "--q", "2")[0] == 2
    assert run(capsys, "weights", "--m", "31", "--q", "2")[0] == 2
    assert run(capsys, "verify", "--m", "4", "--q", "4")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["weights"])
    assert info.value.code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", "5", "--area", "4", "--format", "json")
    assert code == 0
    rows = json.loads(out)["profiles"]
    assert [(r["profile"], r["value"]) for r in rows] == [(["4"], "15"), (["3", "1"], "11")]
    assert rows[1]["corners"] == [["1", "4"], ["2", "3"]]


def test_admissible_csv(capsys):
    code, out, _ = run(capsys, "admissible", "--m", "15")
    assert code == 0
    rows = {(r[0], r[1]): r for r in (line.split(",") for line in out.splitlines()[1:])}
    assert rows["14", "15"][3] == "105"
    assert rows["4", "9"][3] == "26"
    assert rows["7", "10"][4] == "0"
    _, out, _ = run(capsys, "admissible", "--m", "11")
    rows = {(r[0], r[1]): r for r in (line.split(",") for line in out.splitlines()[1:])}
    assert rows["4", "9"][4] == "1"


def test_admissible_text(capsys):
    code, out, _ = run(capsys, "admissible", "--m", "9", "--format", "text")
    assert code == 0
    assert "x" in out and out.splitlines()[0].startswith("  9 |")


def test_output_is_deterministic(capsys):
    argv = ["weights", "--m", "7", "--q", "3", "--method", "both", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_cache_round_trip(capsys, tmp_path):
    argv = ["weights", "--m", "6", "--q", "2", "--format", "json"]
    fresh = run(capsys, *argv)[1]
    first = run(capsys, *argv, "--cache-dir", str(tmp_path))[1]
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    second = run(capsys, *argv, "--cache-dir", str(tmp_path))[1]
    assert fresh == first == second


def test_corrupt_cache_is_ignored(capsys, tmp_path):
    argv = ["weights", "--m", "5", "--q", "2", "--format", "json", "--cache-dir", str(tmp_path)]
    good = run(capsys, *argv)[1]
    path = next(tmp_path.iterdir())
    blob = json.loads(path.read_text())
    blob["payload"]["n"] = "0"
    path.write_text(json.dumps(blob))
    assert run(capsys, *argv)[1] == good


def test_out_file(capsys, tmp_path):
    target = tmp_path / "w.json"
    code, out, _ = run(capsys, "weights", "--m", "4", "--q", "3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert [r["d"] for r in json.loads(target.read_text())["weights"]] == ["81", "108", "117", "126", "129", "130"]
