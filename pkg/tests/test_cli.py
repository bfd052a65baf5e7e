"""End-to-end command line behavior: deterministic output bytes, JSON
payload shape, exit codes, and argument validation."""

import json
import subprocess
import sys

import pytest

from galoischeck.cli import main

# every check payload carries exactly these keys, in this order
REPORT_KEYS = ["command", "target", "universe", "cases_checked", "verdict",
               "counterexample", "elapsed_ms", "tool_version"]


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_spec_text_report(capsys):
    code, out, err = run_cli(
        capsys, "check-spec", "--target", "takeWhile", "--max-len", "4")
    assert code == 0 and err == ""
    assert out == ("law: spec:takeWhile\n"
                   "universe: alphabet=2 max_len=4\n"
                   "cases: 3844\n"
                   "verdict: pass\n")


def test_check_gc_json_failure_payload(capsys):
    code, out, err = run_cli(
        capsys, "check-gc", "--target", "words-unwords",
        "--max-len", "6", "--format", "json")
    assert code == 1 and err == ""
    payload = json.loads(out)
    assert list(payload) == REPORT_KEYS
    assert payload["command"] == "check-gc"
    assert payload["target"] == "words-unwords"
    assert payload["universe"] == {"alphabet_size": 2, "max_len": 6}
    assert payload["cases_checked"] == 2
    assert payload["verdict"] == "fail"
    assert payload["counterexample"] == {"xs": [], "ws": [[]]}
    assert payload["elapsed_ms"] is None
    assert payload["tool_version"] == "0.1.0"


@pytest.mark.parametrize("argv", [
    ("check-spec", "--target", "takeWhile", "--max-len", "4",
     "--format", "json"),
    ("check-gc", "--target", "words-unwords", "--max-len", "6",
     "--format", "json"),
    ("check-laws", "--target", "idempotent", "--max-len", "4",
     "--format", "json"),
])
def test_output_bytes_do_not_depend_on_workers(capsys, argv):
    code1, out1, _ = run_cli(capsys, *argv, "--workers", "1")
    code4, out4, _ = run_cli(capsys, *argv, "--workers", "4")
    assert (code1, out1) == (code4, out4)


def test_oracle_text_output(capsys):
    code, out, err = run_cli(
        capsys, "oracle", "--target", "filter", "--pred", "0b01",
        "--input", "1,0,1")
    assert code == 0 and err == ""
    assert out == ("target: filter\n"
                   "universe: alphabet=2 max_len=5\n"
                   "xs: (1, 0, 1)\n"
                   "pred: 0b01\n"
                   "result: (0,)\n")


def test_oracle_json_output(capsys):
    code, out, err = run_cli(
        capsys, "oracle", "--target", "take", "--n", "2",
        "--input", "0,1,0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == ["command", "target", "universe", "inputs",
                             "result", "tool_version"]
    assert payload["inputs"] == {"xs": [0, 1, 0], "n": 2}
    assert payload["result"] == [0, 1]


def test_oracle_zip_two_inputs(capsys):
    code, out, _ = run_cli(
        capsys, "oracle", "--target", "zip", "--alphabet", "6",
        "--input", "1,2,3", "--input", "4,5", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"] == [[1, 4], [2, 5]]


@pytest.mark.parametrize("argv", [
    ("check-spec", "--target", "reverse"),
    ("check-order", "--target", "lexicographic"),
    ("check-gc", "--target", "reverse"),
    ("check-laws", "--target", "associativity"),
    ("find-counterexample", "--target", "take"),
    ("oracle", "--target", "words-unwords", "--input", "0"),
    ("check-spec", "--target", "takeWhile", "--pred", "0b111"),
    ("check-spec", "--target", "takeWhile", "--pred", "junk"),
    ("check-spec", "--target", "zip", "--pred", "0b01"),
    ("check-spec", "--target", "filter", "--n", "2"),
    ("check-spec", "--target", "take", "--n", "-1"),
    ("oracle", "--target", "filter", "--pred", "0b01", "--input", "2,0"),
    ("oracle", "--target", "filter", "--pred", "0b01",
     "--input", "0,0,0,0,0,0"),
    ("oracle", "--target", "zip", "--input", "0,1"),
    ("oracle", "--target", "filter", "--input", "0,1"),
    ("oracle", "--target", "take", "--input", "0,1"),
    ("oracle", "--target", "zip", "--n", "1",
     "--input", "0", "--input", "1"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith("error: ")
    assert out == ""


def test_find_counterexample_words(capsys):
    code, out, err = run_cli(
        capsys, "find-counterexample", "--target", "words-unwords",
        "--max-len", "6")
    assert code == 1 and err == ""
    assert "verdict: fail" in out
    assert "  ws = ((), ())" in out
    assert "  joined = (0,)" in out


def test_find_counterexample_exhausted_search(capsys):
    code, out, err = run_cli(
        capsys, "find-counterexample", "--target", "words-unwords",
        "--max-len", "0")
    assert code == 2
    assert out == ""
    assert err.startswith("error: ") and "all 1 word lists" in err


def test_check_laws_fusion(capsys):
    code, out, _ = run_cli(
        capsys, "check-laws", "--target", "fusion", "--max-len", "4")
    assert code == 0
    assert "law: fusion\n" in out
    assert "cases: 992\n" in out
    assert "verdict: pass\n" in out


def test_check_order_text_has_least_line(capsys):
    code, out, _ = run_cli(
        capsys, "check-order", "--target", "prefix", "--max-len", "4")
    assert code == 0
    assert out.endswith("least: ()\n")
    assert "verdict: pass" in out


def test_check_order_json_payload(capsys):
    code, out, _ = run_cli(
        capsys, "check-order", "--target", "prefix", "--max-len", "4",
        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert list(payload) == REPORT_KEYS
    assert payload["verdict"] == "pass"
    assert payload["counterexample"] is None


def test_list_targets_text(capsys):
    code, out, err = run_cli(capsys, "list-targets")
    assert code == 0 and err == ""
    assert out == (
        "orders: pair-prefix prefix product sublist suffix\n"
        "specs: dropWhile filter take takeWhile zip\n"
        "pairs: lines-unlines words-unwords\n"
        "laws: cancellation-left cancellation-right fusion gc idempotent "
        "indirect-equality injective-adjoint order-laws semi-inverse "
        "split-append\n")


def test_list_targets_json(capsys):
    code, out, _ = run_cli(capsys, "list-targets", "--format", "json")
    assert code == 0
    groups = json.loads(out)
    assert list(groups) == ["orders", "specs", "pairs", "laws"]
    assert groups["specs"] == ["dropWhile", "filter", "take", "takeWhile",
                               "zip"]


def test_budget_exhaustion_exits_2(capsys):
    code, out, err = run_cli(
        capsys, "check-spec", "--target", "zip", "--budget", "1000")
    assert code == 2
    assert out == ""
    assert "exceed budget 1000" in err


def test_help_and_missing_command(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    code, _, err = run_cli(capsys)
    assert code == 2 and "command" in err


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "galoischeck", "list-targets"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("orders: ")
