import hashlib
import json
import subprocess
import sys

import pytest


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "steinerforge", *args],
        capture_output=True, text=True, cwd=cwd, timeout=300,
    )


# ---------------------------------------------------------------------------
# happy paths


def test_build_writes_code_files(tmp_path):
    prefix = str(tmp_path / "code")
    manifest_path = str(tmp_path / "run.json")
    res = run_cli(
        "build", "-m", "6", "-E", "2", "--extended",
        "--out", prefix, "--manifest", manifest_path,
    )
    assert res.returncode == 0, res.stderr
    assert "[OK] built [64, 51]" in res.stdout
    manifest = json.loads(open(manifest_path).read())
    assert manifest["format"] == "steinerforge-run-v1"
    assert manifest["results"]["dimension"] == 51
    blob = open(prefix + ".bits", "rb").read()
    assert manifest["outputs"]["code.bits"] == hashlib.sha256(blob).hexdigest()
    code_manifest = json.loads(open(prefix + ".json").read())
    assert code_manifest["length"] == 64
    assert code_manifest["role"] == "extended"


def test_weights_closed_form(tmp_path):
    out = str(tmp_path / "wd.json")
    res = run_cli(
        "weights", "-m", "6", "-E", "2", "--extended", "--dual",
        "--method", "closed", "--out", out,
    )
    assert res.returncode == 0, res.stderr
    assert "A_24 = 1008" in res.stdout
    assert "A_32 = 6174" in res.stdout
    data = json.loads(open(out).read())
    assert data["counts"]["32"] == "6174"


def test_weights_methods_agree(tmp_path):
    args = ["weights", "-m", "6", "-E", "2", "--extended", "--dual"]
    brute = run_cli(*args, "--method", "brute")
    closed = run_cli(*args, "--method", "closed")
    assert brute.returncode == closed.returncode == 0
    strip = lambda s: [l for l in s.splitlines() if l.startswith("  A_")]
    assert strip(brute.stdout) == strip(closed.stdout)


def test_design_certifies_steiner(tmp_path):
    blocks = str(tmp_path / "blocks.txt")
    cert = str(tmp_path / "cert.json")
    res = run_cli(
        "design", "-m", "6", "-E", "2", "--extended", "-w", "4", "-t", "2",
        "--blocks-out", blocks, "--certificate-out", cert,
    )
    assert res.returncode == 0, res.stderr
    assert "lambda=1, b=336" in res.stdout
    assert "Steiner" in res.stdout
    cert_data = json.loads(open(cert).read())
    assert cert_data == {
        "b": 336, "k": 4, "lambda": 1, "steiner": True, "t": 2, "v": 64,
    }
    lines = open(blocks).read().splitlines()
    assert lines[0].startswith("#design v=64 k=4")
    assert len(lines) == 1 + 336


def test_check_all_pass(tmp_path):
    manifest_path = str(tmp_path / "run.json")
    res = run_cli(
        "check", "-m", "6", "-E", "2", "--klp", "--affine",
        "--manifest", manifest_path,
    )
    assert res.returncode == 0, res.stderr
    assert "[OK] KLP criterion holds" in res.stdout
    assert "[OK] affine invariance: 4032 maps" in res.stdout
    manifest = json.loads(open(manifest_path).read())
    assert manifest["results"]["klp"]["holds"] is True
    assert manifest["results"]["affine"]["checked"] == 4032


def test_check_am_positive():
    res = run_cli(
        "check", "-m", "5", "-E", "1,2", "--extended", "--am", "-t", "3",
        "--method", "brute",
    )
    assert res.returncode == 0, res.stderr
    assert "holds at t=3" in res.stdout
    assert "w=8 (lambda=7)" in res.stdout


# ---------------------------------------------------------------------------
# exit codes


def test_usage_error_is_exit_1():
    res = run_cli("build", "-m", "6")           # missing -E
    assert res.returncode == 1
    res = run_cli("nonsense")
    assert res.returncode == 1
    res = run_cli()
    assert res.returncode == 1
    res = run_cli("design", "-m", "6", "-E", "0", "-w", "4")
    assert res.returncode == 1


def test_infeasible_is_exit_2():
    res = run_cli("weights", "-m", "10", "-E", "2", "--method", "brute")
    assert res.returncode == 2
    assert "infeasible" in res.stderr


def test_failed_check_is_exit_3():
    res = run_cli("check", "-m", "6", "-E", "2", "--extended", "--am", "-t", "2")
    assert res.returncode == 3
    assert "[FAIL] Assmus-Mattson" in res.stdout
    assert "s=3" in res.stdout


def test_version_flag():
    res = run_cli("--version")
    assert res.returncode == 0
    assert res.stdout.startswith("steinerforge ")


# ---------------------------------------------------------------------------
# determinism


def test_manifest_deterministic(tmp_path):
    paths = []
    for name in ["a", "b"]:
        manifest_path = str(tmp_path / f"{name}.json")
        prefix = str(tmp_path / f"code_{name}")
        res = run_cli(
            "build", "-m", "4", "-E", "2", "--extended",
            "--out", prefix, "--manifest", manifest_path,
        )
        assert res.returncode == 0
        paths.append((manifest_path, prefix))
    m_a = json.loads(open(paths[0][0]).read())
    m_b = json.loads(open(paths[1][0]).read())
    # digests identical; manifests differ only in output basenames
    assert m_a["outputs"][f"code_a.bits"] == m_b["outputs"][f"code_b.bits"]
    assert m_a["results"] == m_b["results"]
    blob_a = open(paths[0][1] + ".bits", "rb").read()
    blob_b = open(paths[1][1] + ".bits", "rb").read()
    assert blob_a == blob_b


def test_blocks_file_reload_roundtrip(tmp_path):
    import numpy as np

    import steinerforge as sf

    blocks_path = str(tmp_path / "blocks.txt")
    res = run_cli(
        "design", "-m", "4", "-E", "2", "--extended", "-w", "4",
        "--blocks-out", blocks_path,
    )
    assert res.returncode == 0
    design = sf.load_blocks(blocks_path)
    assert design.v == 16 and design.k == 4 and design.b == 20
    report = sf.verify_t_design(design, 2)
    assert report.ok and report.lam == 1
