"""Command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from skewtorus import cli


def run(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_approx_single(capsys):
    code, out, _ = run(capsys, "approx", "--alpha", "golden", "--N", "5")
    assert code == 0
    assert out == "a,N,D\n8,5,1\n"


def test_approx_family(capsys):
    code, out, _ = run(capsys, "approx", "--alpha", "golden", "--D", "3", "--count", "2")
    assert code == 0
    assert out == "a,N,D\n39,24,3\n63,39,3\n"


def test_approx_cf_alpha(capsys):
    code, out, _ = run(capsys, "approx", "--alpha", "cf:1,2,2,2", "--N", "10")
    assert code == 0
    assert out == "a,N,D\n14,10,2\n"


def test_approx_json(capsys):
    code, out, _ = run(capsys, "approx", "--N", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"a": 8, "N": 5, "D": 1, "M": 5}]


def test_approx_requires_exactly_one_selector(capsys):
    code, _, err = run(capsys, "approx", "--N", "5", "--D", "1")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "approx")
    assert code == 2


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--a", "1", "--N", "3")
    assert code == 0
    assert out.splitlines()[0] == "eta,l,numerator,denominator,decimal"
    assert out.splitlines()[1] == "1,2,1,3,0.3333333333333333"


def test_spacing_csv(capsys):
    code, out, _ = run(capsys, "spacing", "--a", "3", "--N", "9")
    assert code == 0
    assert out == "s_numerator,s_denominator,weight\n0,1,1/3\n1,1,1/3\n2,1,1/3\n"


def test_numvar_direct_single_value(capsys):
    code, out, _ = run(
        capsys, "numvar", "--a", "3", "--N", "9", "--method", "direct", "--L", "1"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "L,value,method,D,truncation_bound"
    assert lines[1] == "1.0,0.6666666666666666,direct-exact,3,"


def test_numvar_closed_grid_zeros_at_integers(capsys):
    code, out, _ = run(capsys, "numvar", "--D", "1", "--method", "closed", "--L", "0:3:301")
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    assert len(rows) == 301
    for L, value, method, D, bound in rows:
        assert method == "closed-form" and D == "1" and bound == ""
        if float(L) == int(float(L)):
            assert float(value) == 0.0


def test_numvar_fourier_reports_bound(capsys):
    code, out, _ = run(
        capsys, "numvar", "--D", "3", "--method", "fourier", "--K", "10000", "--L", "1"
    )
    assert code == 0
    L, value, method, D, bound = out.splitlines()[1].split(",")
    assert method == "fourier(K=10000)"
    assert abs(float(value) - 2 / 3) <= float(bound)


def test_numvar_poisson_overlay(capsys):
    code, out, _ = run(
        capsys, "numvar", "--D", "1", "--method", "closed", "--L", "0:1:3", "--poisson"
    )
    assert code == 0
    lines = out.splitlines()[1:]
    assert len(lines) == 6
    assert lines[3:] == ["0.0,0.0,poisson,1,", "0.5,0.5,poisson,1,", "1.0,1.0,poisson,1,"]


def test_numvar_json(capsys):
    code, out, _ = run(
        capsys,
        "numvar", "--D", "3", "--method", "fourier", "--L", "1", "--K", "500",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["method"] == "fourier(K=500)"
    assert rows[0]["truncation_bound"] > 0


def test_exit_code_unsupported_closed_form(capsys):
    code, _, err = run(capsys, "numvar", "--D", "5", "--method", "closed", "--L", "1")
    assert code == 3 and "D=5" in err


def test_exit_code_bad_grid(capsys):
    for grid in ("5:1:10", "0:3:1", "abc", "1:2"):
        code, _, err = run(capsys, "numvar", "--D", "1", "--method", "closed", "--L", grid)
        assert code == 4, grid
    # leading dash needs the = form to get past argparse
    code, _, err = run(capsys, "numvar", "--D", "1", "--method", "closed", "--L=-1:3:10")
    assert code == 4


def test_exit_code_precision_exhausted(capsys):
    code, _, err = run(capsys, "approx", "--alpha", "cf:1,1,1", "--N", "1000000")
    assert code == 2 and "prefix" in err


def test_figure1_columns_and_coincidences(tmp_path, capsys):
    out_path = tmp_path / "fig.csv"
    code, _, _ = run(capsys, "figure1", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("# D1,D2,D3,D6: closed-form")
    assert lines[1] == "L,D1,D2,D3,D6,D8,D9"
    rows = [line.split(",") for line in lines[2:]]
    assert len(rows) == 451
    d1 = [r[1] for r in rows]
    d2 = [r[2] for r in rows]
    d3 = [r[3] for r in rows]
    d6 = [r[4] for r in rows]
    d8 = [float(r[5]) for r in rows]
    assert d1 == d2
    assert d3 == d6
    assert max(d8) > max(float(x) for x in d3)


def test_figure1_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "figure1", "--out", str(p1))[0] == 0
    assert run(capsys, "figure1", "--out", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_figure1_json_meta(capsys):
    code, out, _ = run(capsys, "figure1", "--L", "0:9:19", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["meta"]["methods"]["D8"] == "fourier(K=10000)"
    assert payload["meta"]["truncation_bounds"]["D8"] > 0
    assert len(payload["rows"]) == 19


def test_witness_reports_both_laws(capsys):
    code, out, _ = run(capsys, "witness", "--count", "2")
    assert code == 0
    assert "delta(s - 1)" in out
    assert "(1/3) delta(s)" in out


def test_orbit_rows(capsys):
    code, out, _ = run(capsys, "orbit", "--alpha", "0.5", "--T", "3")
    assert code == 0
    assert out == "t,p,q\n0,0.0,0.0\n1,0.5,0.0\n2,0.0,0.0\n"


def test_verify_green(capsys):
    code, out, _ = run(capsys, "verify", "--a", "3", "--N", "9")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "unitarity",
        "trace-formula",
        "power-sums",
        "spacing-law",
        "numvar-direct-vs-closed",
        "numvar-direct-vs-fourier",
    ]
    assert all(c["ok"] for c in report["checks"])


def test_verify_alpha_selection(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "golden", "--N", "5")
    assert code == 0
    assert json.loads(out)["a"] == 8


def test_verify_names_failing_check(capsys, monkeypatch):
    monkeypatch.setattr(cli, "unitarity_defect", lambda U: 1.0)
    code, out, err = run(capsys, "verify", "--a", "3", "--N", "9")
    assert code == 1
    assert "FAIL: unitarity" in err
    report = json.loads(out)
    assert report["ok"] is False
    assert report["checks"][0]["ok"] is False


def test_help_exits_zero():
    with pytest.raises(SystemExit) as exc:
        cli.main(["--help"])
    assert exc.value.code == 0
