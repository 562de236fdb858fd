import json
from pathlib import Path

import pytest

from qfk.cli import main
from qfk.datafiles import DatumFileError, datum_from_json, datum_to_json, load_datum
from qfk.datum import preset

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_exit_codes(capsys):
    assert run(capsys, "validate", DATA / "min-z4-explicit.json")[0] == 0
    code, out, _ = run(capsys, "validate", DATA / "broken-symmetry.json")
    assert code == 1 and "symmetry" in out
    code, out, _ = run(capsys, "validate", DATA / "char0-prenichols.json")
    assert code == 1 and "characteristic 0" in out


def test_input_errors_exit_two(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"group": {"moduli": [4]},\n "field": }')
    code, _, err = run(capsys, "info", bad)
    assert code == 2 and "line 2" in err
    partial = tmp_path / "partial.json"
    partial.write_text(json.dumps({"group": {"moduli": [4]}, "field": {"backend": "prime", "p": 13}, "f": [[1]]}))
    code, _, err = run(capsys, "info", partial)
    assert code == 2 and "'g'" in err
    assert run(capsys, "validate")[0] == 2
    assert run(capsys, "validate", "--preset", "min-z4", "--prime", 7)[0] == 2


def test_invalid_datum_blocks_simples(capsys):
    code, _, err = run(capsys, "simples", DATA / "broken-symmetry.json")
    assert code == 1 and "violation" in err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--preset", "prenichols-char3")
    rep = json.loads(out)
    assert code == 0
    assert rep["dimensions"]["H"] == 72 and rep["dimensions"]["double"] == 5184
    assert rep["dual_generator_degrees"]["R*"] == [1, 2]


def test_simples_with_oracle(capsys):
    code, out, _ = run(capsys, "simples", DATA / "min-z4-f257.json", "--target", "double", "--oracle")
    assert code == 0
    assert "16 simples, sum of squared dimensions 196" in out
    assert "oracle: pass (dim J = 60)" in out


def test_oracle_precondition_is_reported(capsys):
    code, out, _ = run(capsys, "simples", "--preset", "prenichols-char3", "--oracle")
    assert code == 0 and "skipped (precondition)" in out


def test_reports_are_deterministic(capsys, tmp_path):
    reports = []
    for k in range(2):
        path = tmp_path / f"r{k}.json"
        assert run(capsys, "simples", "--preset", "frobenius-sl2-l3", "--export", path, "--threads", k + 1)[0] == 0
        rep = json.loads(path.read_text())
        rep.pop("timings")
        reports.append(rep)
    assert reports[0] == reports[1]
    assert reports[0]["simples"]["sum_dim_squared"] == 28


def test_prime_override(capsys):
    code, out, _ = run(capsys, "simples", "--preset", "frobenius-sl2-l3", "--prime", 61, "--oracle")
    assert code == 0 and "oracle: pass" in out


def test_export_import_roundtrip(capsys, tmp_path):
    for side in "LR":
        assert run(capsys, "export", "prenichols", tmp_path / f"{side}.json", "--preset", "frobenius-sl2-l3", "--side", side)[0] == 0
    obj = datum_to_json(preset("frobenius-sl2-l3"))
    obj["bundles"] = {"L": "L.json", "R": "R.json"}
    dfile = tmp_path / "datum.json"
    dfile.write_text(json.dumps(obj))
    d, factors = load_datum(dfile)
    assert set(factors) == {"L", "R"} and factors["L"].dim == 3
    code, out, _ = run(capsys, "simples", dfile)
    assert code == 0 and "6 simples, sum of squared dimensions 28" in out


@pytest.mark.parametrize("what", ["H", "dual", "double"])
def test_export_bundles(capsys, tmp_path, what):
    path = tmp_path / f"{what}.json"
    assert run(capsys, "export", what, path, "--preset", "min-z4")[0] == 0
    b = json.loads(path.read_text())
    assert b["kind"] == what or what == "H"
    if what == "double":
        assert b["dim"] == 256 and b["straddle"]


def test_datum_json_roundtrip():
    for name in ("min-z4", "frobenius-sl2-l3", "prenichols-char3"):
        d = preset(name)
        assert datum_from_json(datum_to_json(d)) == d
    with pytest.raises(DatumFileError):
        datum_from_json({"preset": "nope"})
