import csv
import io
import json

import pytest

from gfnu.cli import SPECTRUM_COLUMNS, WAVE_COLUMNS, main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_csv_schema(capsys):
    code, out, _ = run(capsys, "spectrum", "--potential", "ho", "--n-max", "2", "--l-max", "1")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0]) == SPECTRUM_COLUMNS
    assert len(rows) == 6
    for row in rows:
        n, l = int(row["n"]), int(row["l"])
        assert float(row["E_root"]) == pytest.approx(2 * n + l + 1.5, rel=1e-10)
        assert float(row["E_oracle"]) == pytest.approx(2 * n + l + 1.5, rel=1e-4)


def test_spectrum_json_schema(capsys):
    code, out, _ = run(capsys, "spectrum", "--potential", "morse", "--param", "D0=8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert doc["columns"] == list(SPECTRUM_COLUMNS)
    assert doc["rows"][0]["E_root"] == pytest.approx(1.875, rel=1e-12)


def test_output_is_byte_stable(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("potential = kratzer  # comment\nn_max = 2\nparam.De = 7\nformat = json\n")
    first = run(capsys, "spectrum", "--config", str(cfg))[1]
    second = run(capsys, "spectrum", "--config", str(cfg))[1]
    assert first == second
    assert json.loads(first)["rows"][2]["n"] == 2


def test_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("potential = ho\nn_max = 3\n")
    out = run(capsys, "spectrum", "--config", str(cfg), "--n-max", "0")[1]
    assert len(out.strip().splitlines()) == 2


def test_sweep_point_matches_spectrum(capsys):
    spec = run(capsys, "spectrum", "--potential", "hulthen", "--n-max", "1")[1]
    sweep = run(capsys, "sweep", "--potential", "hulthen", "--n-max", "1", "--alpha-range", "1:1:0.1")[1]
    assert spec == sweep


def test_sweep_rows_sorted(capsys):
    out = run(capsys, "sweep", "--potential", "kratzer", "--n-max", "1", "--alpha-range", "0.8:1:0.1",
              "--beta-range", "0.9:1:0.1", "--oracle", "off")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    keys = [(float(r["alpha"]), float(r["beta"]), int(r["n"]), int(r["l"])) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == 3 * 2 * 2
    assert all(r["E_oracle"] == "" for r in rows)


def test_missing_states_are_flagged(capsys):
    out = run(capsys, "spectrum", "--potential", "hulthen", "--param", "P=2", "--param", "p=1", "--n-max", "6")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert "no-bound-state-bracketed" in rows[-1]["flags"]


def test_l_independent_rows_flagged(capsys):
    out = run(capsys, "spectrum", "--potential", "morse", "--l-max", "1", "--oracle", "off")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert "l-independent-map" in rows[1]["flags"]


def test_wavefunction_json(capsys, tmp_path):
    target = tmp_path / "psi.json"
    code = main(["wavefunction", "--potential", "kratzer", "--n", "1", "--npts", "11",
                 "--format", "json", "--out", str(target)])
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["columns"] == list(WAVE_COLUMNS)
    assert len(doc["rows"]) == 11
    assert doc["meta"]["measure"] == "r^2 dr"


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--potential", "square"],
        ["spectrum", "--alpha", "1.5"],
        ["spectrum", "--param", "omega=-1"],
        ["spectrum", "--param", "nonsense"],
        ["spectrum", "--n-max", "99"],
        ["sweep", "--alpha-range", "0.5:1.2:0.1"],
        ["spectrum", "--config", "/nonexistent/file"],
        ["wavefunction", "--potential", "pt"],
    ],
)
def test_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("gfnu: error:")


def test_parse_range_inclusive():
    assert parse_range("0.6:1:0.1", "alpha") == [0.6, 0.7, 0.8, 0.9, 1.0]
