"""Command-line interface: file formats, round-trips and exit codes."""

import json
import math
import os

import pytest

from ffalattice import cli


def run(args, tmp_path):
    cwd = os.getcwd()
    os.chdir(tmp_path)
    try:
        return cli.main(args)
    finally:
        os.chdir(cwd)


def test_singularities_csv_and_sidecar(tmp_path):
    code = run(["singularities", "--kappa0", "1", "--kappaA", "1",
                "--imEa", "1"], tmp_path)
    assert code == 0
    lines = (tmp_path / "singularities.csv").read_text().split("\n")
    assert lines[0] == "E0,k0,kind"
    fields = lines[1].split(",")
    assert float(fields[0]) == pytest.approx(0.0, abs=1e-12)
    assert float(fields[1]) == pytest.approx(math.pi / 2.0, abs=1e-12)
    assert fields[2] == "amplifying"
    doc = json.loads((tmp_path / "singularities.config.json").read_text())
    assert doc["schema_version"] == 1
    assert doc["derived"]["count"] == 1
    assert doc["config"]["imEa"] == 1.0


def test_reflectance_inf_token_with_flag(tmp_path):
    # a 49-point open grid contains k = pi/2 where R diverges for these
    # parameters; the CSV must carry the literal token "inf", never NaN
    code = run(["reflectance", "--kappaA", "1", "--imEa", "1",
                "--kpoints", "49"], tmp_path)
    assert code == 0
    text = (tmp_path / "reflectance.csv").read_text()
    assert "nan" not in text.lower()
    rows = [ln.split(",") for ln in text.strip().split("\n")[1:]]
    divergent = [r for r in rows if r[3] == "1"]
    assert len(divergent) == 1
    assert divergent[0][2] == "inf"
    for r in rows:
        if r[3] == "0":
            assert math.isfinite(float(r[2]))


def test_round_trip_byte_identical(tmp_path):
    assert run(["decay", "--kappaA", "1.41421356", "--imEa", "1",
                "--tFinal", "3"], tmp_path) == 0
    first = (tmp_path / "decay.csv").read_bytes()
    assert run(["--config", str(tmp_path / "decay.config.json")], tmp_path) == 0
    assert (tmp_path / "decay.csv").read_bytes() == first


def test_json_format(tmp_path):
    assert run(["selfenergy", "--kappaA", "1", "--epoints", "8",
                "--format", "json"], tmp_path) == 0
    doc = json.loads((tmp_path / "selfenergy.json").read_text())
    assert doc["columns"] == ["E", "Delta", "V", "ReSigmaPlus", "ImSigmaPlus"]
    assert len(doc["rows"]) == 8


def test_domain_scan_grid(tmp_path):
    assert run(["domain-scan", "--reEaOverKappa0", "0", "--grid", "10x12"],
               tmp_path) == 0
    lines = (tmp_path / "domain-scan.csv").read_text().strip().split("\n")
    assert lines[0] == "kappaRatio,imEaOverKappa0,real"
    assert len(lines) == 1 + 10 * 12


def test_poles_command(tmp_path):
    assert run(["poles", "--kappaA", "1", "--imEa", "1"], tmp_path) == 0
    lines = (tmp_path / "poles.csv").read_text().strip().split("\n")
    assert lines[0] == "Rez,Imz,ReResidue,ImResidue"
    vals = [float(v) for v in lines[1].split(",")]
    assert vals[2] == pytest.approx(2.0, abs=1e-8)


def test_invalid_config_exit_code(tmp_path):
    assert run(["decay", "--kappa0", "-1", "--tFinal", "5"], tmp_path) == 2
    assert run(["domain-scan", "--grid", "1x1"], tmp_path) == 2


def test_wavepacket_derived_quantities(tmp_path):
    assert run(["wavepacket", "--kappaA", "1", "--imEa", "1", "--k",
                str(math.pi / 2.0), "--n0", "30", "--deltaN", "7",
                "--tFinal", "40"], tmp_path) == 0
    doc = json.loads((tmp_path / "wavepacket.config.json").read_text())
    assert doc["derived"]["gain"] > 100.0


def test_threads_env_does_not_change_output(tmp_path, monkeypatch):
    assert run(["reflectance", "--kappaA", "1", "--imEa", "0.5",
                "--kpoints", "100"], tmp_path) == 0
    base = (tmp_path / "reflectance.csv").read_bytes()
    monkeypatch.setenv("FFA_THREADS", "3")
    assert run(["reflectance", "--kappaA", "1", "--imEa", "0.5",
                "--kpoints", "100"], tmp_path) == 0
    assert (tmp_path / "reflectance.csv").read_bytes() == base
