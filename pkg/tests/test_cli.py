import csv
import io
import json
import math
import subprocess
import sys

import pytest

from zetasaw.cli import EXIT_FAIL, EXIT_NONCONV, EXIT_OK, EXIT_USAGE, main
from zetasaw import verify


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    body = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(body))))


def meta(text):
    return dict(ln[2:].split("=", 1) for ln in text.splitlines() if ln.startswith("# "))


def test_eval_w(capsys):
    code, out, _ = run(capsys, "eval", "w", "0.7")
    assert code == EXIT_OK
    r = rows(out)[0]
    assert float(r["re"]) == 0.4 and r["symbolic"] == "2/5"
    assert meta(out)["command"] == "eval"


def test_eval_chi_on_critical_point(capsys):
    code, out, _ = run(capsys, "eval", "chi", "--N", "10", "--s", "0.5")
    assert code == EXIT_OK
    assert float(rows(out)[0]["re"]) == pytest.approx(1, abs=1e-14)


def test_eval_geomzeta_int(capsys):
    _, out, _ = run(capsys, "eval", "geomzeta-int", "2")
    r = rows(out)[0]
    assert r["symbolic"] == "-3/4 + 1/2*zeta(2)"
    assert float(r["re"]) == pytest.approx(math.pi**2 / 12 - 0.75, abs=1e-15)


@pytest.mark.parametrize(
    "argv,check",
    [
        (["eval", "zeta", "--s", "2"], lambda r: float(r["re"]) == pytest.approx(math.pi**2 / 6)),
        (["eval", "zeta_w", "--N", "1000", "--s", "2"], lambda r: abs(float(r["re"]) - math.pi**2 / 6) < 2e-6),
        (["eval", "lambertw", "-1", "--s", "-0.36787944117144233"], lambda r: abs(float(r["re"]) + 1) < 1e-7),
        (["eval", "schroder", "5"], lambda r: r["symbolic"] == "1 1 2 6 22 90"),
        (["eval", "gamma-orbit", "10"], lambda r: r["symbolic"] == "1078915495184 1869172236288"),
        (["eval", "tube", "1/8"], lambda r: r["symbolic"] == "1/2" and r["provenance"] == "v=2"),
        (["eval", "mellin", "1", "--s", "1"], lambda r: float(r["re"]) == pytest.approx(0.25)),
        (["eval", "h", "3/10"], lambda r: r["symbolic"] == "1/3"),
        (["eval", "cf", "-0.36787944117144233", "8"], lambda r: r["symbolic"] == "-1 1 1 1 2 1 1 4"),
    ],
)
def test_eval_ops(capsys, argv, check):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert check(rows(out)[0])


def test_eval_chi_residue_reports_error(capsys):
    _, out, _ = run(capsys, "eval", "chi-residue", "--N", "177")
    r = rows(out)[0]
    assert float(r["re"]) > 0 and float(r["error"]) < 1e-10


def test_usage_errors(capsys):
    assert run(capsys, "eval", "nope")[0] == EXIT_USAGE
    assert run(capsys, "eval", "w", "0")[0] == EXIT_USAGE
    assert run(capsys, "eval", "geomzeta-int")[0] == EXIT_USAGE
    assert run(capsys, "eval", "w", "0.5", "--samples", "100")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["scan", "bogus"])
    assert exc.value.code == EXIT_USAGE


def test_nonconvergence_exit(capsys):
    # too few digits for eleven exact orbit steps is a precision failure
    code, _, err = run(capsys, "eval", "gamma-orbit", "31")
    assert code == EXIT_USAGE and "zetasaw:" in err
    from zetasaw import maps

    def boom(*a, **k):
        raise maps.PrecisionError("enclosure straddles a boundary")

    orig = maps.gamma_orbit
    maps.gamma_orbit = boom
    try:
        assert run(capsys, "eval", "gamma-orbit", "3")[0] == EXIT_NONCONV
    finally:
        maps.gamma_orbit = orig


def test_scan_chi_residue(capsys):
    code, out, _ = run(capsys, "scan", "chi-residue", "--range", "170..180")
    assert code == EXIT_OK
    assert meta(out)["sign_change"] == "176/177"
    data = rows(out)
    assert [int(r["N"]) for r in data] == list(range(170, 181))
    flagged = [int(r["N"]) for r in data if r["sign_flip"] == "1"]
    assert flagged == [177]


def test_scan_content(capsys):
    _, out, _ = run(capsys, "scan", "content", "--eps-range", "1e-6:1e-1", "--points", "11")
    data = rows(out)
    assert len(data) == 11
    assert abs(float(data[0]["scaled"]) - 2) < 0.02


def test_scan_roots(capsys):
    _, out, _ = run(capsys, "scan", "roots", "--kind", "laplace", "--n", "1..9", "--m=-5..5")
    data = rows(out)
    assert len(data) == 9 * 11
    for r in data:
        if int(r["m"]) not in (0, -1):
            assert float(r["residual"]) <= 1e-9 * int(r["n"]) ** 2
    _, out, _ = run(capsys, "scan", "roots", "--kind", "mellin", "--n", "1:2", "--m", "1:4")
    data = rows(out)
    assert len(data) == 8 and all(float(r["residual"]) <= 1e-9 for r in data)


def test_scan_spacing(capsys):
    _, out, _ = run(capsys, "scan", "spacing", "--n", "1:3")
    data = rows(out)
    assert float(data[0]["spacing_im"]) == pytest.approx(2 * math.pi / math.log(2))
    assert data[0]["quotient"] == "nan"


def test_json_mirror(capsys):
    _, out_csv, _ = run(capsys, "eval", "zeta_h", "--N", "50", "--s", "2,1")
    _, out_json, _ = run(capsys, "eval", "zeta_h", "--N", "50", "--s", "2,1", "--format", "json")
    doc = json.loads(out_json)
    assert doc["columns"] == ["op", "re", "im", "error", "provenance", "symbolic"]
    assert doc["rows"][0]["re"] == float(rows(out_csv)[0]["re"])
    assert doc["meta"]["N"] == 50


def test_determinism_and_out_file(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert main(["scan", "content", "--points", "7", "--out", str(p)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""
    text = a.read_text()
    assert "# samples=256" in text and "# radius=0.10000000000000001" in text


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "fractal")
    assert code == EXIT_OK
    data = rows(out)
    assert any(r["check"] == "Table row 10" and r["status"] == "pass" for r in data)
    code, out, _ = run(capsys, "verify", "maps", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["failed"] == 0
    assert any(c["name"] == "gamma orbit r=10" for c in doc["checks"])


def test_verify_failure_exit(capsys, monkeypatch):
    bad = verify.Check("x", "forced", 1, 2, 0.0, False)
    monkeypatch.setitem(verify.SUITES, "roots", lambda: [bad])
    assert run(capsys, "verify", "roots")[0] == EXIT_FAIL


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zetasaw", "eval", "w", "7/10"], capture_output=True, text=True)
    assert proc.returncode == 0 and "2/5" in proc.stdout
