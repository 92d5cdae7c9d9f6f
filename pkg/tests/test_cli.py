"""CLI golden outputs, exit codes, determinism."""

import json

import pytest

from leavitt.cli import run

PARALLEL = "v a\nv b\ne x a b\ne y a b\n"
PATH3 = "v p\nv q\nv r\ne e1 p q\ne e2 q r\n"
CYCLE = "v a\nv b\ne x a b\ne y b a\n"


@pytest.fixture
def parallel_file(tmp_path):
    p = tmp_path / "parallel.graph"
    p.write_text(PARALLEL)
    return str(p)


@pytest.fixture
def path3_file(tmp_path):
    p = tmp_path / "path3.graph"
    p.write_text(PATH3)
    return str(p)


def test_classify_golden(parallel_file):
    code, out, err = run(["classify", parallel_file])
    assert code == 0 and err == ""
    assert out == '{"type":[3],"dimension":9,"sinks":[{"vertex":"b","n":3}],"kappa":3}\n'


def test_classify_stdin():
    code, out, _ = run(["classify", "-"], stdin=PATH3)
    assert code == 0
    assert '"type":[3]' in out and '"dimension":9' in out


def test_classify_cyclic_exit_2():
    code, out, err = run(["classify", "-"], stdin=CYCLE)
    assert code == 2 and out == ""
    assert "not finite-dimensional" in err


def test_classify_bad_file_exit_2(tmp_path):
    code, _, err = run(["classify", str(tmp_path / "missing.graph")])
    assert code == 2 and err != ""
    bad = tmp_path / "bad.graph"
    bad.write_text("v a\ne x a b\n")
    code, _, err = run(["classify", str(bad)])
    assert code == 2 and "line 2" in err


def test_usage_errors_exit_1():
    assert run([])[0] == 1
    assert run(["no-such-command"])[0] == 1
    assert run(["truncate"])[0] == 1  # neither FILE nor --type
    code, _, err = run(["truncate", "g.txt", "--type", "2,3"])
    assert code == 1 and "exactly one" in err


def test_truncate_type_golden():
    code, out, err = run(["truncate", "--type", "3,2"])
    assert code == 0 and err == ""
    assert out == (
        "type: [2,3]\n"
        "kappa: 4\n"
        "alpha: 1010\n"
        "digraph {\n"
        '  "u1";\n'
        '  "u2";\n'
        '  "u3";\n'
        '  "w1";\n'
        '  "u1" -> "u2";\n'
        '  "u2" -> "u3";\n'
        '  "u1" -> "w1";\n'
        "}\n"
    )


def test_truncate_json_and_dot_file(tmp_path):
    dot_path = tmp_path / "tree.dot"
    code, out, _ = run(["truncate", "--type", "2,3", "--format", "json", "--dot", str(dot_path)])
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha"] == "1010" and payload["kappa"] == 4
    assert dot_path.read_text() == payload["dot"]


def test_truncate_from_file(parallel_file):
    code, out, _ = run(["truncate", parallel_file])
    assert code == 0
    assert "alpha: 110\n" in out


def test_truncate_part_one_exit_2():
    code, _, err = run(["truncate", "--type", "1,3"])
    assert code == 2 and "part equal to 1" in err


def test_iso_golden(parallel_file, path3_file):
    code, out, err = run(["iso", parallel_file, path3_file])
    assert (code, out, err) == (0, "isomorphic\n", "")
    code, out, _ = run(["iso", parallel_file, parallel_file])
    assert out == "isomorphic\n"


def test_iso_not_isomorphic(tmp_path, path3_file):
    p = tmp_path / "path2.graph"
    p.write_text("v a\nv b\ne x a b\n")
    code, out, _ = run(["iso", str(p), path3_file])
    assert (code, out) == (0, "not isomorphic\n")
    code, out, _ = run(["iso", str(p), path3_file, "--format", "json"])
    assert json.loads(out) == {"isomorphic": False, "type1": [2], "type2": [3]}


def test_enum_truncated_golden():
    code, out, err = run(["enum-truncated", "4"])
    assert code == 0 and err == ""
    assert out == "1000 [2,2,2]\n1010 [2,3]\n1100 [3,3]\n1110 [4]\n"


def test_enum_truncated_json():
    code, out, _ = run(["enum-truncated", "3", "--format", "json"])
    assert json.loads(out) == [
        {"code": "100", "type": [2, 2]},
        {"code": "110", "type": [3]},
    ]


def test_extremal_max_golden():
    code, out, _ = run(["extremal-max", "6", "--format", "json"])
    assert code == 0
    assert '"value":50' in out
    payload = json.loads(out)
    assert payload["n"] == 6 and payload["s"] == 2
    assert payload["witness_dot"].startswith("digraph {")


def test_extremal_max_text_fixed_sinks():
    code, out, _ = run(["extremal-max", "6", "--sinks", "5"])
    assert code == 0
    assert out.startswith("n: 6\ns: 5\nvalue: 20\ndigraph {\n")


def test_extremal_min_golden(tmp_path):
    code, out, _ = run(["extremal-min", "7", "--format", "json"])
    assert json.loads(out)["value"] == 24
    dot_path = tmp_path / "witness.dot"
    code, out, _ = run(["extremal-min", "7", "--sinks", "3", "--dot", str(dot_path)])
    assert code == 0 and "value: 27" in out
    assert dot_path.read_text().startswith("digraph {")


def test_extremal_bad_range_exit_2():
    assert run(["extremal-max", "1"])[0] == 2
    assert run(["extremal-min", "6", "--sinks", "6"])[0] == 2


def test_line_count_golden():
    assert run(["line-count", "4"]) == (0, "2\n", "")
    code, out, _ = run(["line-count", "5", "--format", "json"])
    assert json.loads(out) == {"n": 5, "count": "4"}
    assert run(["line-count", "1"])[0] == 2


def test_line_types_golden():
    code, out, err = run(["line-types", "5"])
    assert code == 0 and err == ""
    assert out == "[2,2,3]\n[3,3]\n[2,4]\n[5]\n"
    code, out, _ = run(["line-types", "4", "--format", "json"])
    assert json.loads(out) == [[2, 3], [4]]


def test_verify_small_sweep():
    code, out, err = run(["verify", "--max-n", "4"])
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("0 failed")
    assert "PASS truncated-count n=12 expected=1024 observed=1024" in lines
    assert "PASS max-dim n=4 s=2 expected=18 observed=18" in lines


def test_verify_json_shape():
    code, out, _ = run(["verify", "--max-n", "3", "--format", "json"])
    assert code == 0
    reports = json.loads(out)
    assert all(r["pass"] for r in reports)
    assert {"claim", "n", "s", "expected", "observed", "pass"} == set(reports[0])


def test_verify_bad_cap():
    assert run(["verify", "--max-n", "40"])[0] == 2


def test_help_exits_zero():
    code, out, _ = run(["--help"])
    assert code == 0 and "COMMAND" in out
