import json
import subprocess
import sys

import pytest

from necfix.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_example1_table(capsys):
    code, out, err = run_cli(
        capsys, "analyze", "(0;+;[2,7];{()})", "--order", "14", "--map", "x=7,2;e=5"
    )
    assert code == 0
    assert "kernel genus 7" in out
    assert "F=7 V=1" in out
    assert "c1:1t" in out
    assert "Scherrer 9 <= 9 (equality)" in out


def test_analyze_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "analyze", "(0;+;[2,7];{()})", "--order", "14", "--map", "x=7,2;e=5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["validation"]["valid"] is True
    assert payload["report"]["kernel_genus"] == 7
    inv = payload["report"]["involution"]
    assert inv["isolated_total"] == 7
    assert inv["oval_total"] == 1
    assert inv["per_cycle"][0]["twisted"] is True
    assert inv["scherrer_lhs"] == inv["scherrer_rhs"] == 9


def test_analyze_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "analyze", "(0;+;[2,7];{()})", "--order", "14", "--map", "x=7,2;e=5",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("signature,M,images,p,F,V")
    assert "x=7,2;e=5;c=7" in lines[1]


def test_analyze_invalid_map_exits_4(capsys):
    code, out, err = run_cli(
        capsys, "analyze", "(0;+;[2,7];{()})", "--order", "14", "--map", "x=7,3;e=4"
    )
    assert code == 4
    assert "SMOOTH-ELLIPTIC" in out


def test_analyze_parse_error_exits_2(capsys):
    code, out, err = run_cli(capsys, "analyze", "(0;+;[1];{})", "--order", "14")
    assert code == 2
    assert out == ""
    assert "position 7" in err


def test_enumerate_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "enumerate", "(0;+;[2,7];{()})", "--order", "14", "--up-to-aut",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 1
    assert payload["maps"][0]["map"] == "x=7,2;e=5;c=7"


def test_census_csv_stdout(capsys):
    code, out, _ = run_cli(
        capsys, "census", "--order", "4", "--max-genus", "6", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "signature,M,images,p,F,V,twists,scherrer_slack,canonical"
    assert lines[-1].startswith("#trailer,rows=")
    assert len(lines) >= 3


def test_census_verify_agrees(capsys):
    code, out, _ = run_cli(
        capsys,
        "census", "--order", "6", "--max-genus", "6", "--verify", "--format", "json",
    )
    assert code == 0


def test_census_output_file_and_workers(tmp_path, capsys):
    paths = []
    for workers in ("1", "2"):
        path = tmp_path / f"census-{workers}.csv"
        code, _, _ = run_cli(
            capsys,
            "census", "--order", "6", "--max-genus", "8",
            "--format", "csv", "--workers", workers, "--output", str(path),
        )
        assert code == 0
        paths.append(path)
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_verify_all_v(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--order", "28", "--all-v", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agreement"] is True
    assert len(payload["entries"]) == 28


def test_verify_single_map(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "(0;+;[2,7];{()})", "--order", "14", "--map", "x=7,2;e=5",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agreement"] is True
    assert payload["per_cycle"][0]["delta"] == 7


def test_verify_all_v_odd_order_rejected(capsys):
    code, _, err = run_cli(capsys, "verify", "--order", "27", "--all-v")
    assert code == 2
    assert "even" in err


def test_verify_without_signature_or_sweep(capsys):
    code, _, err = run_cli(capsys, "verify", "--order", "14")
    assert code == 2


def test_max_order(capsys):
    code, out, _ = run_cli(capsys, "max-order", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"genus": 5, "max_order": 10}


def test_max_order_cap(capsys):
    code, _, err = run_cli(capsys, "max-order", "40")
    assert code == 2
    assert "capped" in err


def test_verify_disagreement_exits_3(capsys, monkeypatch):
    import necfix.cli as cli
    from necfix.oracle import SweepTranscript

    broken = SweepTranscript(14, (), False, ("v=5: double-coset 2, N/delta 1, gcd 1",))
    monkeypatch.setattr(cli, "involution_sweep", lambda order: broken)
    code, out, err = run_cli(capsys, "verify", "--order", "14", "--all-v")
    assert code == 3
    assert "first disagreement" in err
    assert "v=5" in err


def test_census_disagreement_exits_3(capsys, monkeypatch):
    import necfix.cli as cli

    monkeypatch.setattr(cli, "run_census", lambda *a, **k: ([], ["bad tuple"]))
    code, _, err = run_cli(capsys, "census", "--order", "4", "--max-genus", "6")
    assert code == 3
    assert "bad tuple" in err


def test_unknown_flag_exits_2(capsys):
    assert main(["analyze", "--nope"]) == 2


def test_console_script_end_to_end():
    result = subprocess.run(
        [
            sys.executable, "-m", "necfix.cli",
            "analyze", "(0;+;[2,7];{()})", "--order", "14",
            "--map", "x=7,2;e=5", "--format", "json",
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["report"]["kernel_genus"] == 7
