import json

import pytest

from catalan_hankel.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_seq_plain(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "catalan-conv", "--k", "1", "--n-max", "5")
    assert code == 0
    assert out.splitlines() == ["0: 1", "1: 1", "2: 2", "3: 5", "4: 14", "5: 42"]


def test_seq_polynomial_plain(capsys):
    code, out, _ = run_cli(capsys, "seq", "--family", "narayana-conv", "--k", "3", "--n-max", "3")
    assert code == 0
    assert out.splitlines() == [
        "0: 1",
        "1: 2 + t",
        "2: 3 + 5*t + t^2",
        "3: 4 + 14*t + 9*t^2 + t^3",
    ]


def test_seq_csv(capsys):
    code, out, _ = run_cli(
        capsys, "seq", "--family", "narayana-conv", "--k", "2", "--n-max", "2",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    assert lines[1] == "0,[1]"
    assert lines[2] == "1,\"[1,1]\""


def test_seq_json(capsys):
    code, out, _ = run_cli(
        capsys, "seq", "--family", "catalan-conv", "--k", "2", "--n-max", "3",
        "--format", "json",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [
        {"n": 0, "value": 1},
        {"n": 1, "value": 2},
        {"n": 2, "value": 5},
        {"n": 3, "value": 14},
    ]


def test_seq_t_eval_collapses_to_integers(capsys):
    code, out, _ = run_cli(
        capsys, "seq", "--family", "narayana-conv", "--k", "2", "--n-max", "4",
        "--t-eval", "1",
    )
    assert code == 0
    assert out.splitlines() == ["0: 1", "1: 2", "2: 5", "3: 14", "4: 42"]


def test_seq_t_eval_rejected_for_integers(capsys):
    code, _, err = run_cli(
        capsys, "seq", "--family", "catalan-conv", "--k", "1", "--n-max", "2",
        "--t-eval", "1",
    )
    assert code == 2
    assert "t-eval" in err


def test_hankel_range_csv(capsys):
    code, out, _ = run_cli(
        capsys, "hankel", "--family", "catalan-conv", "--k", "4", "--shift", "-2",
        "--sizes", "0..8", "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    values = [int(line.split(",")[1]) for line in lines[1:]]
    assert values == [1, 0, 0, -1, -1, 2, 2, -3, -3]


def test_hankel_single_size(capsys):
    code, out, _ = run_cli(
        capsys, "hankel", "--family", "narayana-conv", "--k", "4", "--sizes", "4",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"n": 4, "value": [0, 0, 0, 0, 1, 0, 1, 0, 1]}


def test_hankel_matrix_output(capsys):
    code, out, _ = run_cli(
        capsys, "hankel", "--family", "catalan-conv", "--k", "2", "--sizes", "3",
        "--matrix",
    )
    assert code == 0
    assert json.loads(out) == {"n": 3, "rows": [[1, 2, 5], [2, 5, 14], [5, 14, 42]]}


def test_hankel_bad_range(capsys):
    code, _, err = run_cli(
        capsys, "hankel", "--family", "catalan-conv", "--k", "1", "--sizes", "5..2",
    )
    assert code == 2
    assert "error" in err


def test_verify_suite_pass(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "thm4")
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    assert reports and all(r["status"] == "pass" for r in reports)
    assert {"check", "params", "status", "lhs", "rhs"} == set(reports[0])
    assert "0 failed" in err


def test_verify_all_passes(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "all", "--seed", "7")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) > 1000
    assert all(json.loads(line)["status"] == "pass" for line in lines)


def test_paths_list(capsys):
    code, out, _ = run_cli(capsys, "paths", "--length", "6", "--height", "0", "--list")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert "(1,0,1,0,1,0): 1" in lines
    assert "(1,2,1,2,1,0): t^2" in lines


def test_paths_weight_json(capsys):
    code, out, _ = run_cli(
        capsys, "paths", "--length", "4", "--height", "2", "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {
        "length": 4,
        "height": 2,
        "count": 3,
        "weight": [2, 1],
    }


def test_paths_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("HANKEL_PATH_CAP", "4")
    code, _, err = run_cli(capsys, "paths", "--length", "6", "--height", "0")
    assert code == 2
    assert "cap" in err
    code, _, _ = run_cli(capsys, "paths", "--length", "6", "--height", "0", "--cap", "6")
    assert code == 0


def test_usage_errors_exit_two(capsys):
    assert main(["seq", "--family", "bogus", "--n-max", "2"]) == 2
    capsys.readouterr()
    assert main(["nonsense"]) == 2
    capsys.readouterr()
    assert main([]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
