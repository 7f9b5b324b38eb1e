import json
import subprocess
import sys
from pathlib import Path

import pytest

from amplesets.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
SIX = str(DATA / "families" / "six_cycle.txt")
FULL2 = str(DATA / "families" / "full2.txt")
EMPTY = str(DATA / "families" / "empty3.txt")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_all_on_six_cycle(capsys):
    code, out, _ = run(capsys, "check", SIX, "all")
    assert code == 1
    assert "agree: true" in out and "COUNT: false" in out


def test_check_all_json_matches_text(capsys):
    code, out, _ = run(capsys, "check", SIX, "all", "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["agree"] and not any(data["verdicts"].values())
    _, text, _ = run(capsys, "check", SIX, "all")
    for k, v in data["verdicts"].items():
        assert f"{k}: {'true' if v else 'false'}" in text


def test_check_single_id(capsys):
    assert run(capsys, "check", FULL2, "COUNT")[0] == 0
    code, out, _ = run(capsys, "check", SIX, "LOPSIDED")
    assert code == 1 and "witness" in out


def test_check_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check", "missing.txt")
    assert code == 2 and "missing.txt" in err
    bad = tmp_path / "bad.txt"
    bad.write_text("++\n+0\n")
    code, _, err = run(capsys, "check", str(bad))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "check", FULL2, "NOPE")
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["enumerate", "2", "--jobs", "0"])
    assert info.value.code == 2


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "2", "COUNT")
    assert code == 0 and out == "14\n" and "wall time" in err
    assert run(capsys, "enumerate", "1", "COUNT")[1] == "4\n"
    assert run(capsys, "enumerate", "5", "COUNT")[0] == 2
    code, out, _ = run(capsys, "enumerate", "2", "SCA_COCIRC", "--format", "json")
    assert json.loads(out)["count"] == 14


def test_enumerate_sampling(capsys):
    code, out, _ = run(capsys, "enumerate", "7", "COUNT", "--sample", "5", "--seed", "3")
    assert code == 0 and out.endswith("of 5\n")
    assert out == run(capsys, "enumerate", "7", "COUNT", "--sample", "5", "--seed", "3")[1]


def test_orthants(capsys, tmp_path):
    one = tmp_path / "one.csv"
    one.write_text("0.5,0.5\n")
    code, out, _ = run(capsys, "orthants", str(one))
    assert code == 0 and "L: ++" in out and "ample: true" in out
    code, out, _ = run(capsys, "orthants", str(DATA / "clouds" / "two_points.json"), "--format", "json")
    data = json.loads(out)
    assert data["orthants"] == ["--", "++"] and not data["ample"] and not data["sca"]
    _, out, _ = run(capsys, "orthants", str(DATA / "clouds" / "segment.csv"))
    assert "sca: true" in out
    ragged = tmp_path / "ragged.csv"
    ragged.write_text("1,2\n3\n")
    assert run(capsys, "orthants", str(ragged))[0] == 2


def nodes(dot):
    return sum(1 for line in dot.splitlines() if line.endswith('";') and " -- " not in line)


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", SIX, "skeleton")
    assert code == 0 and out.count(" -- ") == 6 and nodes(out) == 6
    code, out, _ = run(capsys, "export", FULL2, "baryc")
    assert out.count(" -- ") == 12 and nodes(out) == 9
    code, out, _ = run(capsys, "export", EMPTY, "baryc")
    assert code == 0 and " -- " not in out
    target = tmp_path / "g.dot"
    assert run(capsys, "export", SIX, "skeleton", "--output", str(target))[0] == 0
    assert target.read_text() == run(capsys, "export", SIX, "skeleton")[1]
    code, out, _ = run(capsys, "export", SIX, "--format", "json")
    assert json.loads(out)["f_vector"] == [6, 6, 0, 0]


def test_report(capsys):
    code, out, _ = run(capsys, "report", SIX)
    assert code == 0 and "4 <= 6 <= 7" in out and "vc dimension: 2" in out
    _, out, _ = run(capsys, "report", SIX, "--format", "json")
    assert json.loads(out)["complex"]["dimension"] == 1


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "2")
    assert code == 0 and "ample_families: 14" in out
    code, out, _ = run(capsys, "oracle", "--family", SIX, "--format", "json")
    assert json.loads(out) == {"n": 3, "members": 6, "shattered": 7, "strongly_shattered": 4, "ample": False}
    assert run(capsys, "oracle")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "amplesets", "check", FULL2, "COUNT"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "COUNT: true\n"
