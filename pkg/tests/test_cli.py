import json
import subprocess
import sys
from importlib import resources

import pytest

from eigenstrata.cli import main


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out = capsys.readouterr().out if capsys else ""
    return code, out


def test_dimension_text_and_json(capsys):
    code, out = run_cli("dimension", "-p", "2,1", capsys=capsys)
    assert code == 0 and "match: yes" in out
    code, out = run_cli("dimension", "-p", "2,1,1", "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert code == 0 and payload["formula"] == 8 and payload["match"]


def test_sample_output_file(tmp_path, capsys):
    target = tmp_path / "samples.json"
    code, _ = run_cli("sample", "-p", "2,1", "--count", "3", "--seed", "5",
                      "--format", "json", "-o", str(target), capsys=capsys)
    assert code == 0
    payload = json.loads(target.read_text())
    assert len(payload["samples"]) == 3


def test_interpolate_json(capsys):
    code, out = run_cli("interpolate", "-p", "2,1", "-d", "3", "--seed", "7",
                        "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert code == 0 and payload["nullspace_dim"] == 7


def test_hilbert_range_flag(capsys):
    code, out = run_cli("hilbert", "-p", "2,1", "--t-range", "3..6", capsys=capsys)
    assert code == 0
    assert "yes" in out and "NO" not in out


def test_edd_and_degree(capsys):
    code, out = run_cli("edd", "-p", "2,2", capsys=capsys)
    assert code == 0 and "closed form 6, distinct subspaces 3" in out
    code, out = run_cli("degree", "-p", "2,2", "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert payload["paper_degree"] == 6 and payload["geometric_degree"] == 3


def test_nearest_roundtrip(tmp_path, capsys):
    matrix = {"n": 3, "upper": [0.0, 0.0, 0.0, 2.0, 0.0, 10.0]}
    source = tmp_path / "m.json"
    source.write_text(json.dumps(matrix))
    code, out = run_cli("nearest", "-p", "2,1", "--matrix", str(source),
                        "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert code == 0
    assert payload["squared_distance"] == pytest.approx(2.0, abs=1e-9)


def test_invariants_table(capsys):
    code, out = run_cli("invariants", "-p", "2,1", "--dmax", "6", capsys=capsys)
    assert code == 0
    assert out.strip().splitlines()[-1].split() == ["6", "1", "1", "yes"]


def test_discriminant_command(capsys):
    code, out = run_cli("discriminant", "-n", "2", capsys=capsys)
    assert code == 0 and "x11^2-2*x11*x22+4*x12^2+x22^2" in out


def test_verify_command(capsys):
    code, out = run_cli("verify", "--seed", "3", capsys=capsys)
    assert code == 0 and "overall: ok" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["dimension", "-p", "definitely-not-a-partition"])
    assert exc.value.code == 2


def test_missing_matrix_file(capsys):
    code, _ = run_cli("nearest", "-p", "2,1", "--matrix", "/nonexistent.json",
                      capsys=capsys)
    assert code == 1


def test_byte_identical_reruns():
    script = ("import sys; from eigenstrata.cli import main; "
              "sys.exit(main(sys.argv[1:]))")
    cmd = [sys.executable, "-c", script,
           "interpolate", "-p", "2,1", "-d", "3", "--seed", "9", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_suite_subset_and_corrupted_golden(tmp_path, capsys):
    code, out = run_cli("suite", "--seed", "5", "--only", "1,12",
                        "--format", "json", capsys=capsys)
    payload = json.loads(out)
    assert code == 0 and payload["ok"]

    # corrupt one shipped generator and point the suite at the copy
    golden = tmp_path / "golden"
    golden.mkdir()
    data = resources.files("eigenstrata").joinpath("data")
    for f in data.iterdir():
        if f.name.endswith(".txt"):
            (golden / f.name).write_text(f.read_text())
    victim = golden / "generators_3_1.txt"
    victim.write_text(victim.read_text().replace("-x12*x34+x13*x24",
                                                 "-x12*x34+2*x13*x24", 1))
    code, out = run_cli("suite", "--seed", "5", "--only", "3",
                        "--golden-dir", str(golden), "--format", "json",
                        capsys=capsys)
    payload = json.loads(out)
    assert code == 1 and not payload["ok"]
    assert any(f.get("file") == "generators_3_1.txt" for f in payload["failures"])


def test_plot_files_rendered(tmp_path, capsys):
    out_png = tmp_path / "hilbert.png"
    code, _ = run_cli("hilbert", "-p", "2,1", "--t-range", "3..5",
                      "--plot", str(out_png), capsys=capsys)
    assert code == 0 and out_png.exists() and out_png.stat().st_size > 0

    near_png = tmp_path / "nearest.png"
    matrix = {"n": 3, "upper": [0.0, 0.1, 0.0, 2.0, 0.0, 10.0]}
    source = tmp_path / "m.json"
    source.write_text(json.dumps(matrix))
    code, _ = run_cli("nearest", "-p", "2,1", "--matrix", str(source),
                      "--plot", str(near_png), capsys=capsys)
    assert code == 0 and near_png.exists() and near_png.stat().st_size > 0
