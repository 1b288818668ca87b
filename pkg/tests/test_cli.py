"""Command-line contract: columns, determinism, exit codes, config files."""

import csv
import io
import json
import math

import numpy as np
import pytest

from dcesim.cli import main

ENH_290K = 520.09513881074987088
N_290K = 259.54756940537493544


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def test_spectrum_cubic_first_row(capsys):
    code, out, err = run_cli(capsys, "spectrum", "--geometry", "cubic",
                             "--length", "0.01", "--max-index", "3")
    assert code == 0 and err == ""
    header, rows = parse_csv(out)
    assert header == ["label", "frequency_rad_per_s"]
    assert rows[0][0] == "(1,1,1)"
    assert float(rows[0][1]) == pytest.approx(1.6312901091678404e11, rel=1e-12)
    assert len(rows) == 27


def test_spectrum_1d(capsys):
    length = math.pi * 299792458.0
    code, out, _ = run_cli(capsys, "spectrum", "--geometry", "1d",
                           "--length", str(length), "--max-index", "4")
    assert code == 0
    _, rows = parse_csv(out)
    assert [r[0] for r in rows] == ["1", "2", "3", "4"]
    np.testing.assert_allclose([float(r[1]) for r in rows], [1, 2, 3, 4], rtol=1e-12)


def test_thermal_room_temperature(capsys):
    code, out, _ = run_cli(capsys, "thermal", "--temp", "290", "--omega", "1.46e11")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["label", "frequency", "occupation", "enhancement", "variance"]
    assert float(rows[0][2]) == pytest.approx(N_290K, rel=1e-12)
    assert float(rows[0][3]) == pytest.approx(ENH_290K, rel=1e-12)


def test_rwa_zero_duration_row_is_zero(capsys):
    code, out, _ = run_cli(capsys, "rwa", "--epsilon", "6e-10",
                           "--omega", "1.46e11", "--temp", "0", "--duration", "0")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["T_duration_s", "N_total", "dN", "dN_vacuum", "enhancement"]
    assert [float(x) for x in rows[0]] == [0.0, 0.0, 0.0, 0.0, 1.0]


def test_rwa_grid_all_zero_delta_at_zero_temp_zero_duration(capsys):
    code, out, _ = run_cli(capsys, "rwa", "--epsilon", "6e-10", "--omega", "1.46e11",
                           "--temp", "0", "--duration", "0", "--points", "5")
    _, rows = parse_csv(out)
    assert len(rows) == 5
    assert all(float(r[2]) == 0.0 for r in rows)


def test_fig1_structure(capsys):
    code, out, _ = run_cli(capsys, "fig1", "--points", "40")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["T_duration_s", "N_vacuum", "N_thermal",
                      "thermal_floor", "variance_band"]
    assert len(rows) == 40
    first = [float(x) for x in rows[0]]
    assert first[0] == 0.0 and first[1] == 0.0
    assert first[2] == first[3]  # at T = 0 duration the total is the floor
    n0 = float(rows[0][3])
    ratios = [(float(r[2]) - n0) / float(r[1]) for r in rows[1:]]
    np.testing.assert_allclose(ratios, ENH_290K, rtol=1e-12)
    assert 2e2 <= ratios[-1] <= 2e3


def test_response_single_mode(capsys):
    duration = 2 * math.pi * 10
    eps = 2 * 0.05 / duration
    code, out, _ = run_cli(capsys, "response", "--epsilon", str(eps), "--omega", "1.0",
                           "--duration", str(duration), "--temp", "0")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["mode", "dN_squeeze", "dN_hop", "dN_total"]
    assert float(rows[0][1]) == pytest.approx(0.05**2, rel=1e-6)
    assert float(rows[0][2]) == 0.0


def test_evolve_small_run(capsys):
    duration = 2 * math.pi * 4
    eps = 2 * 0.25 / duration
    code, out, _ = run_cli(capsys, "evolve", "--epsilon", str(eps), "--omega", "1.0",
                           "--duration", str(duration), "--temp", "0",
                           "--cutoff", "25", "--steps-per-period", "128")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["t", "N_1", "entropy", "trace_defect"]
    assert float(rows[0][1]) == 0.0
    assert float(rows[-1][1]) == pytest.approx(math.sinh(0.25) ** 2, rel=1e-2)
    assert all(float(r[3]) < 1e-10 for r in rows)


def test_mirror_temperature_sweep(capsys):
    code, out, _ = run_cli(capsys, "mirror", "--amplitude", "1e-3", "--omega", "1e3",
                           "--periods", "5", "--temps", "0,145,290")
    assert code == 0
    header, rows = parse_csv(out)
    assert header == ["T_kelvin", "E_vacuum", "E_thermal", "E_total", "ratio"]
    assert float(rows[0][4]) == 0.0
    assert float(rows[2][4]) == pytest.approx(4 * float(rows[1][4]), rel=1e-12)


def test_byte_identical_reruns(tmp_path, capsys):
    # identical configuration (including the output path) -> identical bytes
    args = ["fig1", "--points", "25"]
    out = tmp_path / "run.csv"
    assert main(args + ["--output", str(out)]) == 0
    first = out.read_bytes()
    assert main(args + ["--output", str(out)]) == 0
    assert out.read_bytes() == first
    jout = tmp_path / "run.json"
    assert main(args + ["--format", "json", "--output", str(jout)]) == 0
    jfirst = jout.read_bytes()
    assert main(args + ["--format", "json", "--output", str(jout)]) == 0
    assert jout.read_bytes() == jfirst


def test_json_shape(capsys):
    code, out, _ = run_cli(capsys, "thermal", "--temp", "290",
                           "--omega", "1.46e11", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"config", "rows"}
    assert doc["config"]["temp"] == 290.0
    assert doc["config"]["command"] == "thermal"
    assert doc["rows"][0][3] == pytest.approx(ENH_290K, rel=1e-12)


def test_exit_code_2_on_config_errors(capsys):
    code, _, err = run_cli(capsys, "thermal", "--omega", "1e10")
    assert code == 2
    assert err.startswith("error: config:") and "\n" not in err.strip("\n")
    code, _, err = run_cli(capsys, "spectrum", "--geometry", "cubic",
                           "--length", "-1", "--max-index", "2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["thermal", "--no-such-flag"])
    assert exc.value.code == 2


def test_exit_code_3_on_numerical_failure(capsys):
    # thermal occupation ~12.6 cannot fit in a cutoff-8 space
    code, _, err = run_cli(capsys, "evolve", "--epsilon", "1e-3", "--omega", "1.0",
                           "--duration", "6.28", "--temp", "1e-10", "--cutoff", "8")
    assert code == 3
    assert err.startswith("error: numerical:")


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[thermal]\ntemp = 290\nomega = 1.46e11\n")
    code, out, _ = run_cli(capsys, "thermal", "--config", str(cfg))
    assert code == 0
    _, rows = parse_csv(out)
    assert float(rows[0][3]) == pytest.approx(ENH_290K, rel=1e-12)
    # flags override the file
    code, out, _ = run_cli(capsys, "thermal", "--config", str(cfg), "--temp", "0")
    _, rows = parse_csv(out)
    assert float(rows[0][3]) == 1.0
    # unknown keys are config errors
    bad = tmp_path / "bad.ini"
    bad.write_text("[thermal]\nnonsense = 1\n")
    code, _, err = run_cli(capsys, "thermal", "--config", str(bad), "--temp", "1")
    assert code == 2


def test_freq_ghz_angular_convenience(capsys):
    code, out, _ = run_cli(capsys, "thermal", "--temp", "290",
                           "--freq-ghz-angular", "146")
    assert code == 0
    _, rows = parse_csv(out)
    assert float(rows[0][1]) == 1.46e11
    assert float(rows[0][3]) == pytest.approx(ENH_290K, rel=1e-12)
