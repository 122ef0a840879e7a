import json

import pytest

import commands.dim
import commands.verify
from core.models import VerificationReport
from main import cmd_dispatch, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalan_of_b3(capsys):
    assert run(capsys, "catalan", "--weyl-type", "B", "--rank", "3") == (0, "20\n", "")


def test_catalan_variants(capsys):
    assert run(capsys, "catalan", "--n", "4")[1] == "14\n"
    assert run(capsys, "catalan", "--ddim", "3", "--n", "2")[1] == "5\n"


@pytest.mark.parametrize("argv", [
    ["catalan"],
    ["catalan", "--rank", "3", "--n", "2"],
    ["catalan", "--weyl-type", "B"],
    ["catalan", "--weyl-type", "B", "--rank", "3", "--n", "2"],
    ["narayana", "--type", "B", "--ddim", "3", "--row", "2"],
])
def test_inconsistent_flags_are_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error: Invalid usage")


def test_grassmannian_json(capsys):
    code, out, _ = run(capsys, "hilbert", "grassmannian", "--d", "2", "--n", "2", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["command"] == "hilbert grassmannian"
    assert document["numerator"] == ["1", "3", "1"]
    assert document["pole_order"] == "7"
    assert document["result"] == {"degree": "5", "dimension": "7"}
    assert document["series"]["order"] == "14"
    assert document["series"]["coefficients"][:3] == ["1", "10", "50"]
    assert "metadata" not in document
    assert "reports" not in document


def test_json_output_is_byte_identical_across_runs(capsys):
    argv = ["hilbert", "minimal-orbit", "--n", "3", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_metadata_only_on_request(capsys):
    _, out, _ = run(capsys, "dim", "--rank", "2", "--weight", "1,1", "--format", "json", "--metadata")
    metadata = json.loads(out)["metadata"]
    assert set(metadata) == {"timestamp", "elapsed_seconds", "version"}


def test_latex_output(capsys):
    _, out, _ = run(capsys, "hilbert", "minimal-orbit", "--n", "2", "--format", "latex")
    assert out == "\\frac{1 + 4t + t^{2}}{(1-t)^{4}}\n"
    _, out, _ = run(capsys, "narayana", "--row", "4", "--format", "latex")
    assert out == "1, 6, 6, 1\n"


def test_hilbert_weight_and_benchmark(capsys):
    _, out, _ = run(capsys, "hilbert", "weight", "--rank", "2", "--weight", "1,1", "--expand", "3")
    assert out == "numerator: 1 4 1\npole_order: 4\nseries (order 3): 1 8 27 64\n"
    _, fast, _ = run(capsys, "hilbert", "grassmannian", "--d", "3", "--n", "2", "--benchmark")
    _, checked, _ = run(capsys, "hilbert", "grassmannian", "--d", "3", "--n", "2")
    assert fast == checked


def test_narayana_grassmannian_row(capsys):
    assert run(capsys, "narayana", "--ddim", "3", "--type", "A", "--row", "2")[1] == "1 10 20 10 1\n"


def test_dispatch_returns_the_document():
    code, document = cmd_dispatch(["dim", "--rank", "3", "--weight", "1,0,1", "--scale", "2"])
    assert code == 0
    assert document.result == "84"
    assert document.params == {"rank": "3", "weight": ["1", "0", "1"], "scale": "2"}


@pytest.mark.parametrize("argv", [
    [],
    ["frobenius"],
    ["catalan", "--bogus"],
    ["verify", "pythagoras"],
    ["verify", "li-shanlan", "--n-max", "-1"],
    ["hilbert"],
    ["hilbert", "grassmannian", "--d", "2"],
    ["dim", "--rank", "2", "--weight", "a,b"],
])
def test_argparse_errors_exit_two_with_usage(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "usage:" in err


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "verify" in out


@pytest.mark.parametrize("argv, category", [
    (["dim", "--rank", "2", "--weight=-1,0"], "DOMAIN"),
    (["dim", "--rank", "3", "--weight", "1,0"], "RANGE"),
    (["catalan", "--weyl-type", "E", "--rank", "5"], "ROOT_TYPE"),
    (["hilbert", "weight", "--rank", "2", "--weight", "0,0"], "DOMAIN"),
])
def test_domain_errors_as_json(capsys, argv, category):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 2
    assert out == ""
    document = json.loads(err)
    assert document["success"] is False
    assert document["error"]["category"] == category


def test_verify_reports(capsys):
    code, out, _ = run(capsys, "verify", "li-shanlan", "--n-max", "2", "--m-max", "2", "--format", "json")
    assert code == 0
    document = json.loads(out)
    assert document["result"] == {"total": "9", "passed": "9", "failed": "0"}
    assert document["reports"][0] == {"identity": "li-shanlan", "point": {"n": "0", "m": "0", "upper": "0"}, "status": "pass"}


def test_verify_failure_exits_one(capsys, monkeypatch):
    failing = VerificationReport(identity="li-shanlan", point={"n": 1, "m": 1}, status="fail", left="4", right="5")
    monkeypatch.setattr(commands.verify, "run_suite", lambda name, ranges: [failing])
    code, out, err = run(capsys, "verify", "li-shanlan")
    assert code == 1
    assert out == "li-shanlan: 0 passed, 1 failed\nFAIL li-shanlan [n=1 m=1]: 4 != 5\n"
    assert "li-shanlan failed" in err


def test_unexpected_exceptions_become_internal_errors(capsys, monkeypatch):
    def broken(weight):
        raise ZeroDivisionError("boom")

    monkeypatch.setattr(commands.dim, "weyl_dim", broken)
    code, out, err = run(capsys, "dim", "--rank", "1", "--weight", "1")
    assert code == 1
    assert out == ""
    assert "unexpected internal error occurred: boom" in err


def test_log_file_is_json_lines(tmp_path, capsys):
    log_file = tmp_path / "hwv.log"
    assert main(["catalan", "--n", "3", "-v", "--log-file", str(log_file)]) == 0
    records = [json.loads(line) for line in log_file.read_text().splitlines()]
    assert any(r["record"]["extra"]["command"] == "catalan" for r in records)
    assert capsys.readouterr().out == "5\n"


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "-q")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in out
