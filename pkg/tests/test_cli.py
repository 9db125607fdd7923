import json
import subprocess
import sys

import pytest

from loccw.cli import main
from loccw.fileio import parse_states, serialize_states
from _kets import kets


@pytest.fixture
def d7(tmp_path):
    states, tiles = tmp_path / "d7.json", tmp_path / "d7.tiles.json"
    assert main(["construct", "--family", "odd-square", "--d", "7",
                 "--out", str(states), "--tiles-out", str(tiles)]) == 0
    return states, tiles


@pytest.fixture
def d7_basis(d7, tmp_path):
    states, tiles = d7
    out = tmp_path / "basis.json"
    assert main(["complete", "--states", str(states), "--tiles", str(tiles), "--out", str(out)]) == 0
    return out


def write_states(path, texts, m, n):
    path.write_bytes(serialize_states(kets(texts, m, n)))
    return path


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_odd_square(d7):
    states, tiles = d7
    assert len(parse_states(states.read_bytes())) == 33
    assert json.loads(tiles.read_text())["tiles"]


def test_construct_general_to_stdout(capsys):
    code, out, _ = run(["construct", "--family", "general", "--m", "6", "--n", "6"], capsys)
    assert code == 0
    assert len(parse_states(out)) == 27


def test_construct_unsupported(capsys):
    code, _, err = run(["construct", "--family", "general", "--m", "4", "--n", "5"], capsys)
    assert code == 3
    assert "unsupported" in err


def test_construct_missing_option(capsys):
    code, _, err = run(["construct", "--family", "general", "--m", "5"], capsys)
    assert code == 1 and "--n" in err


def test_usage_error_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check-locc"])
    assert exc.value.code == 1


def test_check_locc_certified(d7, capsys):
    code, out, _ = run(["check-locc", "--states", str(d7[0])], capsys)
    assert code == 0
    assert "certified-indistinguishable" in out
    assert "\033[" not in out


def test_check_locc_inconclusive(tmp_path, capsys):
    path = write_states(tmp_path / "std.json", ["|1>|1>", "|1>|2>", "|2>|1>", "|2>|2>"], 2, 2)
    code, out, _ = run(["check-locc", "--states", str(path), "--json"], capsys)
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "inconclusive-nontrivial-exists"
    assert (doc["dimA"], doc["dimB"]) == (2, 2)
    w = doc["witness"]
    assert w["party"] == "A" and len(w["operators"]) == 2
    assert w["epsilon"] == {"re": "1"}
    assert w["operators"][0] == [[{"re": "3/4"}, {"re": "0"}], [{"re": "0"}, {"re": "1/4"}]]


def test_check_locc_single_party(tmp_path, capsys):
    path = write_states(tmp_path / "std.json", ["|1>|1>", "|1>|2>", "|2>|1>", "|2>|2>"], 2, 2)
    code, out, _ = run(["check-locc", "--states", str(path), "--party", "b", "--json"], capsys)
    doc = json.loads(out)
    assert code == 2 and doc["dimA"] is None and doc["dimB"] == 2


def test_check_locc_json_schema(d7, capsys):
    code, out, _ = run(["check-locc", "--states", str(d7[0]), "--json"], capsys)
    assert code == 0
    assert json.loads(out) == {
        "dims": {"a": 7, "b": 7}, "stateCount": 33, "dimA": 1, "dimB": 1,
        "status": "certified-indistinguishable",
    }


@pytest.mark.parametrize("content", [b"{not json", b'{"dims": {"a": 2, "b": 2}, "states": [{"label": "x"}]}', b""])
def test_corrupt_file_exits_one(tmp_path, capsys, content):
    path = tmp_path / "bad.json"
    path.write_bytes(content)
    code, out, err = run(["check-locc", "--states", str(path)], capsys)
    assert code == 1 and out == "" and err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(["verify", "--states", str(tmp_path / "nope.json")], capsys)
    assert code == 1 and "cannot read" in err


def test_non_orthogonal_input_to_check_locc(tmp_path, capsys):
    path = write_states(tmp_path / "x.json", ["|1>|1>", "|1>(|1>+|2>)"], 2, 2)
    code, _, err = run(["check-locc", "--states", str(path)], capsys)
    assert code == 1 and err


def test_complete(d7_basis, capsys):
    basis = parse_states(d7_basis.read_bytes())
    assert len(basis) == 49


def test_complete_json(d7, tmp_path, capsys):
    out = tmp_path / "b.json"
    code, text, _ = run(["complete", "--states", str(d7[0]), "--tiles", str(d7[1]),
                         "--out", str(out), "--json"], capsys)
    assert code == 0
    assert json.loads(text) == {"dims": {"a": 7, "b": 7}, "inputCount": 33, "added": 16,
                                "stateCount": 49, "out": str(out)}


def test_distinguish_probe_index(d7_basis, capsys):
    code, out, _ = run(["distinguish", "--basis", str(d7_basis), "--probe-index", "5"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 50
    assert lines[-1].startswith("outcome 5, p = 1 ")
    assert lines[4].split()[0] == "5" and lines[4].split()[-1] == "1"


def test_distinguish_bad_index(d7_basis, capsys):
    code, _, err = run(["distinguish", "--basis", str(d7_basis), "--probe-index", "50"], capsys)
    assert code == 1 and "1..49" in err


def test_distinguish_probe_file_json(tmp_path, capsys):
    basis = write_states(tmp_path / "std.json", ["|1>|1>", "|1>|2>", "|2>|1>", "|2>|2>"], 2, 2)
    probe = write_states(tmp_path / "p.json", ["(|1>+|2>)(|1>+|2>)"], 2, 2)
    code, out, _ = run(["distinguish", "--basis", str(basis), "--probe-file", str(probe), "--json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert [d["p"] for d in doc["distribution"]] == ["1/4"] * 4
    assert doc["argmax"]["outcome"] == 1


def test_distinguish_not_a_basis(d7, capsys):
    code, _, err = run(["distinguish", "--basis", str(d7[0]), "--probe-index", "1"], capsys)
    assert code == 1 and "NotABasis" in err


def test_verify_paranoid(d7_basis, capsys):
    code, out, _ = run(["verify", "--states", str(d7_basis), "--paranoid", "--json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["paranoid"]["agree"] is True


def test_verify_reports_offenders(tmp_path, capsys):
    path = write_states(tmp_path / "x.json", ["|1>|1>", "|1>(|1>+|2>)"], 2, 2)
    code, out, _ = run(["verify", "--states", str(path), "--json"], capsys)
    doc = json.loads(out)
    assert code == 1 and not doc["orthogonal"]
    assert doc["offending"] == [["|1>|1>", "|1>(|1>+|2>)", "1"]]


def test_render_ascii(d7, capsys):
    code, out, _ = run(["render", "--tiles", str(d7[1])], capsys)
    assert code == 0
    assert out.splitlines()[3] == "GGBSBGG"


def test_render_svg_to_file(d7, tmp_path, capsys):
    out = tmp_path / "d7.svg"
    code, text, _ = run(["render", "--tiles", str(d7[1]), "--format", "svg", "--out", str(out), "--json"], capsys)
    assert code == 0
    assert json.loads(text)["tileCount"] == 21
    assert out.read_text().count("<rect ") == 21


@pytest.mark.parametrize("argv", [
    ["construct", "--family", "odd-square", "--d", "9"],
    ["construct", "--family", "general", "--m", "8", "--n", "7", "--json"],
])
def test_outputs_are_byte_identical(argv, capsys):
    first = run(argv, capsys)
    second = run(argv, capsys)
    assert first == second


def test_repeated_check_locc_identical(d7, capsys):
    argv = ["check-locc", "--states", str(d7[0]), "--json"]
    assert run(argv, capsys) == run(argv, capsys)


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "loccw.cli", "construct", "--family", "general", "--m", "3", "--n", "3"],
        capture_output=True, env={"LOCCW_COLOR": "0", "PATH": ""}, check=False,
    )
    assert proc.returncode == 0
    assert len(parse_states(proc.stdout)) == 9
