import json
import subprocess
import sys

import pytest

from opident.cli import main


def run_cli(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_theorem1_small_run(capsys):
    code, out, _ = run_cli(
        ["verify", "theorem1", "--max-n", "3", "--max-k", "2", "--max-m", "2",
         "--trials", "2", "--seed", "42"],
        capsys,
    )
    assert code == 0
    assert "PASS" in out


def test_verify_theorem1_trivial_n0(capsys):
    code, out, _ = run_cli(
        ["verify", "theorem1", "--max-n", "0", "--max-k", "1", "--max-m", "1",
         "--trials", "1", "--seed", "1"],
        capsys,
    )
    assert code == 0


def test_verify_theorem1_series_small(capsys):
    code, out, _ = run_cli(
        ["verify", "theorem1", "--series", "--max-n", "2", "--max-k", "2",
         "--max-m", "1", "--trials", "1", "--truncation", "12", "--seed", "3",
         "--json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["all_equal"] is True
    assert payload["first_counterexample"] is None


def test_malformed_functional_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(
        ["verify", "theorem1", "--functional", str(bad), "--trials", "1"], capsys
    )
    assert code == 2
    assert "malformed" in err or "error" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run_cli(["hankel", "--n", "2", "--functional", "/nope.json"], capsys)
    assert code == 2


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # missing target
    assert exc.value.code == 2


def test_hankel_chebyshev(capsys):
    code, out, _ = run_cli(["hankel", "--n", "5"], capsys)
    assert code == 0
    assert out.strip() == "1"
    code, out, _ = run_cli(["hankel", "--n", "0"], capsys)
    assert code == 0
    assert out.strip() == "1"


def test_hankel_pole_exits_1(tmp_path, capsys):
    path = tmp_path / "atoms.json"
    path.write_text('{"type":"atoms","atoms":[["0","1"],["2","1/2"]]}')
    code, _, err = run_cli(
        ["hankel", "--n", "1", "--functional", str(path), "--ys", "2"], capsys
    )
    assert code == 1
    assert "atom" in err


def test_hankel_horizon_exits_1(tmp_path, capsys):
    path = tmp_path / "seq.json"
    path.write_text('{"type":"sequence","moments":["1","0","1/2"]}')
    code, _, err = run_cli(["hankel", "--n", "4", "--functional", str(path)], capsys)
    assert code == 1
    assert "horizon" in err


def test_hankel_modified(tmp_path, capsys):
    path = tmp_path / "atoms.json"
    path.write_text('{"type":"atoms","atoms":[["0","1"]]}')
    code, out, _ = run_cli(
        ["hankel", "--n", "1", "--functional", str(path), "--xs", "3", "--ys", "2"],
        capsys,
    )
    assert code == 0
    assert out.strip() == "3/2"


UVAROV_ATOMS = json.dumps(
    {
        "type": "atoms",
        "atoms": [[str(u), str(w)] for u, w in
                  [(0, 2), (1, 1), (-1, 1), (3, -1), (-3, 2), (5, 1), (-5, 1),
                   (7, 1), (-7, 2), (2, 3)]],
    }
)


def test_uvarov_json_schema(tmp_path, capsys):
    path = tmp_path / "atoms.json"
    path.write_text(UVAROV_ATOMS)
    code, out, _ = run_cli(
        ["uvarov", "--functional", str(path), "--ys", "1/3", "--max-n", "3", "--json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["orthogonal"] is True
    assert [row["n"] for row in payload["polynomials"]] == [0, 1, 2, 3]
    assert all(isinstance(row["degree_ok"], bool) for row in payload["polynomials"])
    gram = payload["gram"]
    assert all(gram[i][j] == "0" for i in range(4) for j in range(4) if i != j)


def test_uvarov_unmodified(tmp_path, capsys):
    path = tmp_path / "atoms.json"
    path.write_text(UVAROV_ATOMS)
    code, out, _ = run_cli(
        ["uvarov", "--functional", str(path), "--max-n", "2", "--json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["orthogonal"] is True


def test_degenerate_functional_exits_1(tmp_path, capsys):
    # two atoms cannot support the depth an (n,k,m) <= (3,2,2) sweep needs
    path = tmp_path / "two.json"
    path.write_text('{"type":"atoms","atoms":[["1","1/2"],["-1","1/2"]]}')
    code, _, err = run_cli(
        ["verify", "theorem1", "--functional", str(path), "--trials", "1",
         "--max-n", "3", "--max-k", "2", "--max-m", "2"],
        capsys,
    )
    assert code == 1
    assert "H(" in err


def test_series_rejects_functional_flag(tmp_path, capsys):
    path = tmp_path / "seq.json"
    path.write_text('{"type":"sequence","moments":["1","0","1/2"]}')
    code, _, err = run_cli(
        ["verify", "theorem1", "--series", "--functional", str(path)], capsys
    )
    assert code == 2


def test_uvarov_requires_atoms(tmp_path, capsys):
    path = tmp_path / "cheb.json"
    path.write_text('{"type":"chebyshev"}')
    code, _, err = run_cli(["uvarov", "--functional", str(path)], capsys)
    assert code == 2


def test_zero_denominator_inputs_exit_2(tmp_path, capsys):
    code, _, err = run_cli(["hankel", "--n", "1", "--xs", "1/0"], capsys)
    assert code == 2
    path = tmp_path / "bad.json"
    path.write_text('{"type":"atoms","atoms":[["1","1/0"]]}')
    code, _, err = run_cli(["hankel", "--n", "1", "--functional", str(path)], capsys)
    assert code == 2


def test_uvarov_degenerate_degree_is_warning_not_failure(tmp_path, capsys):
    # dropped degree is a documented scenario: exit 0, degree_ok carries it
    path = tmp_path / "atoms.json"
    path.write_text(
        '{"type":"atoms","atoms":[["3","-1"],["1","-2"],["0","-2"],["4","2"],["-3","2"]]}'
    )
    code, out, _ = run_cli(
        ["uvarov", "--functional", str(path), "--ys", "1/2", "--max-n", "3", "--json"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    flags = [row["degree_ok"] for row in payload["polynomials"]]
    assert flags == [True, True, False, True]
    assert payload["orthogonal"] is True


def test_report_sweep_serializes_first_counterexample(capsys):
    from opident.cli import _report_sweep
    from opident.identity import VerificationReport
    import argparse

    rep_ok = VerificationReport("theorem1", {"n": 1}, 1, 1, True)
    rep_bad = VerificationReport("theorem1", {"n": 2}, 1, 2, False)
    args = argparse.Namespace(json=True)
    code = _report_sweep([rep_ok, rep_bad], args, "verify theorem1", {"seed": 0})
    out, _ = capsys.readouterr()
    assert code == 1
    payload = json.loads(out)
    assert payload["failures"] == 1
    assert payload["first_counterexample"]["params"] == {"n": 2}


def test_chebyshev_json_schema(capsys):
    code, out, _ = run_cli(["chebyshev", "--max-n", "3", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["all_theorems_hold"] is True
    for row in payload["closed_forms"]:
        assert set(row) == {"id", "n", "lhs", "rhs", "equal", "note"}
    row_7_11 = [r for r in payload["closed_forms"] if r["id"] == "7.11" and r["n"] == 2]
    assert row_7_11[0]["lhs"] == "1/4"
    conj17 = [r for r in payload["conjectures"] if r["id"] == "7.17" and r["n"] == 1]
    assert conj17[0]["equal"] is False  # reported, not suppressed


def test_chebyshev_conjectures_do_not_affect_exit_code(capsys):
    code, out, _ = run_cli(["chebyshev", "--max-n", "2"], capsys)
    assert code == 0
    assert "fails" in out  # conjecture failures are printed


def test_json_determinism_same_config():
    cmd = [
        sys.executable, "-m", "opident.cli", "verify", "theorem1",
        "--max-n", "2", "--max-k", "1", "--max-m", "1", "--trials", "2",
        "--seed", "77", "--json",
    ]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b


def test_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("OPIDENT_SEED", "123")
    code, out1, _ = run_cli(
        ["verify", "theorem1", "--max-n", "2", "--max-k", "1", "--max-m", "1",
         "--trials", "1", "--json"],
        capsys,
    )
    assert code == 0
    assert json.loads(out1)["config"]["seed"] == 123


def test_selftest(capsys):
    code, out, _ = run_cli(["selftest", "--seed", "5"], capsys)
    assert code == 0
    assert out.count("PASS") >= 5
    assert "FAIL" not in out
