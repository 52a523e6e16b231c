"""CLI contract: subcommands, exit codes, deterministic JSON."""

import json
import subprocess
import sys

from branchlab import cli


def run_cli(args, **kw):
    return cli.main(list(args))


def run_capture(capsys, args):
    rc = cli.main(list(args))
    return rc, capsys.readouterr().out


def test_list_single_case(capsys):
    rc, out = run_capture(capsys, ["list", "--cases", "vi"])
    assert rc == 0
    assert out.count("\n") == 1
    assert "SO(16)/SO(15)" in out and "Spin(9)/Spin(7)" in out


def test_list_max_n_2_has_enough_rows(capsys):
    rc, out = run_capture(capsys, ["list", "--max-n", "2"])
    assert rc == 0
    rows = [l for l in out.splitlines() if l.strip()]
    assert len(rows) >= 20
    assert any(l.startswith("i[n=1]") for l in rows)
    assert any(l.startswith("i[n=2]") for l in rows)


def test_list_json(capsys):
    rc, out = run_capture(capsys, ["list", "--format", "json", "--max-n", "1"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert isinstance(payload["cases"], list)
    tags = {c["tag"] for c in payload["cases"]}
    assert {"i", "vi", "star"} <= tags


def test_unknown_case_is_usage_error(capsys):
    rc, _ = run_capture(capsys, ["list", "--cases", "nope"])
    assert rc == 2


def test_verify_small_cases_pass(capsys):
    rc, out = run_capture(capsys, ["verify", "--cases", "x,xi,ix", "--bound", "6"])
    assert rc == 0
    assert "FAIL" not in out
    assert "dl-only-subalgebra-index-2" in out


def test_verify_star_includes_dgx_checks(capsys):
    rc, out = run_capture(
        capsys, ["verify", "--cases", "star", "--bound", "6", "--format", "json"]
    )
    assert rc == 0
    payload = json.loads(out)
    checks = {c["name"] for c in payload["cases"][0]["checks"]}
    assert {"x-not-in-R", "dgx-membership", "dgx-module-decomposition", "dgx-cross-evaluation"} <= checks
    assert all(c["failed"] == 0 for c in payload["cases"][0]["checks"])


def test_verify_json_deterministic(capsys):
    args = ["verify", "--cases", "vi,x", "--bound", "5", "--format", "json"]
    rc1, out1 = run_capture(capsys, args)
    rc2, out2 = run_capture(capsys, args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_transfer_examples(capsys):
    rc, out = run_capture(
        capsys, ["transfer", "--cases", "vi", "--tau", "2", "--lam", "11"]
    )
    assert rc == 0
    assert "['11/2', '7/2', '5/2', '3/2']" in out

    rc, out = run_capture(
        capsys,
        ["transfer", "--cases", "i", "--max-n", "2", "--tau", "0", "--lam", "2", "--format", "json"],
    )
    # case i is instantiated at n=1 and n=2 -> usage error (needs one case)
    assert rc == 2


def test_transfer_invalid_tau_exit_2(capsys):
    rc, _ = run_capture(capsys, ["transfer", "--cases", "vi", "--tau", "-1", "--lam", "3"])
    assert rc == 2


def test_transfer_json_payload(capsys, monkeypatch):
    monkeypatch.setenv("BRANCHLAB_CATALOG", "/nonexistent/path.json")
    rc, out = run_capture(
        capsys,
        ["transfer", "--cases", "x", "--lam", "5/2", "--format", "json"],
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["image"] == ["1", "1"]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc = run_cli(
        ["verify", "--cases", "x", "--bound", "4", "--format", "json", "--out", str(target)]
    )
    assert rc == 0
    payload = json.loads(target.read_text())
    assert payload["cases"][0]["case"] == "x"


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "branchlab.cli", "list", "--cases", "star"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "Spin(8)" in proc.stdout


def test_verify_all_bound_8_exit_zero(capsys):
    rc, out = run_capture(capsys, ["verify", "--cases", "all", "--bound", "8"])
    assert rc == 0
    assert "FAIL" not in out
