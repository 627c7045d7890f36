import csv
import io
import json
from fractions import Fraction

import pytest

from balpha import cli
from balpha import graph as gr
from balpha.formats import format_edge_list


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_spectrum_k4():
    code, text = run("spectrum", "-g", "K4", "-a", "0.3")
    assert code == 0
    rows = csv_rows(text)
    assert rows[0] == ["k", "lambda"]
    assert [float(r[1]) for r in rows[1:]] == pytest.approx([2.5, 2.5, 2.5, 0.9], abs=1e-11)


def test_spectrum_formats_and_sources(tmp_path):
    code, text = run("spectrum", "-g", "K1,24", "-a", "0", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["schema"] == 1 and data["eigenvalues"][0] == pytest.approx(25)
    code, text = run("spectrum", "-g", "C6", "-a", "1/2", "--method", "jacobi")
    assert code == 0 and all(r[1] == "1" for r in csv_rows(text)[1:])
    path = tmp_path / "g.txt"
    path.write_text(format_edge_list(gr.path(3)))
    assert run("spectrum", "-g", str(path), "-a", "1")[0] == 0
    code, text = run("spectrum", "-g", "Bw", "-a", "1", "--format", "table")
    assert code == 0 and "-1" in text


def test_spectrum_twelve_significant_digits():
    _, text = run("spectrum", "-g", "P3", "-a", "1")
    assert csv_rows(text)[1][1] == "1.41421356237"


@pytest.mark.parametrize("argv, code", [
    (["spectrum", "-g", "zz", "-a", "0.3"], 2),
    (["spectrum", "-g", "K4", "-a", "1.5"], 3),
    (["spectrum", "-g", "K4", "-a", "x"], 3),
    (["spectrum", "-g", "K4"], 2),
    (["beta0", "-g", "K4", "--tol", "nonsense=1"], 2),
    (["beta0", "-g", "A?"], 4),
    (["detpoly", "-g", "C13", "-a", "0.5"], 6),
    (["bounds", "-g", "C17", "-a", "0.5"], 5),
    (["verify", "--max-n", "8"], 2),
])
def test_exit_codes(argv, code, capsys):
    assert run(*argv)[0] == code
    if code != 2 or argv[0] != "spectrum" or len(argv) > 3:
        assert capsys.readouterr().err


@pytest.mark.parametrize("spec, beta", [("K4", "0.8000000000"), ("petersen", "0.7142857143"), ("K2,3", "0.6666666667")])
def test_beta0(spec, beta):
    code, text = run("beta0", "-g", spec)
    assert code == 0
    assert f"beta0: {beta}" in text
    assert "indefinite:" in text and "positive_definite:" in text


def test_beta0_json_and_tolerance_override():
    code, text = run("beta0", "-g", "C5", "--format", "json", "--tol", "beta_bracket=1e-6")
    data = json.loads(text)
    assert code == 0 and data["bracket_width"] < 1e-6 and data["regular_formula"] == pytest.approx(data["beta0"], abs=1e-6)


def test_sweep_default_grid_star():
    code, text = run("sweep", "-g", "K1,24")
    rows = csv_rows(text)
    assert code == 0 and rows[0] == ["alpha", "lambda1", "yz_bound"]
    values = {float(r[0]): (float(r[1]), float(r[2])) for r in rows[1:]}
    assert values[0.7] == pytest.approx((7.718, 0.936), abs=5e-4)
    assert values[0.9] == pytest.approx((5.334, 0.361), abs=5e-4)
    assert len(values) == 10


def test_sweep_table_mode_and_half():
    code, text = run("sweep", "-g", "K1,24", "--format", "table")
    assert code == 0
    assert "0.800    6.232     0.250" in text
    code, text = run("sweep", "-g", "C5", "--grid", "0:1:1/4")
    rows = csv_rows(text)
    assert [r[0] for r in rows[1:]] == ["0.0", "0.25", "0.5", "0.75", "1.0"]
    assert rows[3][2] == "undefined"
    assert all(float(r[1]) >= float(r[2]) - 1e-7 for r in rows[1:] if r[2] != "undefined")
    code, text = run("sweep", "-g", "C5", "--grid", "0.5,0.1", "--format", "json")
    assert [r["alpha"] for r in json.loads(text)["rows"]] == [0.1, 0.5]


def test_bounds_k4_chromatic_tight():
    code, text = run("bounds", "-g", "K4", "-a", "0.9")
    data = json.loads(text)
    assert code == 0 and data["schema"] == 1 and data["graph_id"] == "K4"
    entry = {e["name"]: e for e in data["bounds"]}["upper_lambda_n_chromatic"]
    assert entry["holds"] and entry["gap"] < 1e-9
    assert {"name": "upper_lambda1_f_alpha", "reason": "not bipartite"} in data["nonapplicable"]


def test_bounds_c6_two_thirds_branch():
    _, text = run("bounds", "-g", "C6", "-a", "2/3")
    entry = {e["name"]: e for e in json.loads(text)["bounds"]}["upper_lambda_n_bipartite"]
    assert entry["equality_case"] == "alpha_two_thirds"


def test_bounds_petersen_strict():
    _, text = run("bounds", "-g", "petersen", "-a", "0.3")
    data = json.loads(text)
    for e in data["bounds"]:
        assert e["holds"] and e["gap"] >= 0
        if e["target"] == "lambda1":
            assert e["gap"] > 1e-6


def test_bounds_with_supplied_chi_and_half():
    code, text = run("bounds", "-g", "C17", "-a", "0.5", "--chi", "3")
    data = json.loads(text)
    assert code == 0 and data["chi"] == 3
    assert {"name": "lower_lambda1_yz", "reason": "undefined at alpha=1/2"} in data["nonapplicable"]
    code, text = run("bounds", "-g", "K4", "-a", "0.3", "--format", "table")
    assert code == 0 and "lower_lambda1_yz" in text


def test_detpoly_examples():
    code, text = run("detpoly", "-g", "P3", "-a", "2/3")
    assert code == 0 and "det (Sachs):      0" in text and "det (elimination): 0" in text
    code, text = run("detpoly", "-g", "K3", "-a", "1")
    assert "det A (Harary):   2" in text and "det (Sachs):      2" in text
    code, text = run("detpoly", "-g", "K2", "-a", "1/3", "--format", "json")
    data = json.loads(text)
    a = Fraction(1, 3)
    expected = [1, -2 * (1 - a), (1 - a) ** 2 - (2 * a - 1) ** 2]
    assert [Fraction(c["sachs"]) for c in data["coefficients"]] == expected
    assert [Fraction(c["leverrier"]) for c in data["coefficients"]] == expected


def test_verify_small_and_empty():
    code, text = run("verify", "--max-n", "4", "--random", "2", "--random-max-n", "8")
    assert code == 0 and text.splitlines()[-1].startswith("OK")
    code, text = run("verify", "--max-n", "1", "--min-n", "2", "--random", "0")
    assert code == 0 and "OK: 0 checks" in text


def test_output_is_deterministic():
    for argv in (["sweep", "-g", "petersen"], ["bounds", "-g", "T3,3,3", "-a", "0.7"],
                 ["verify", "--max-n", "3", "--random", "1", "--seed", "9"]):
        assert run(*argv) == run(*argv)


@pytest.mark.slow
def test_verify_default_corpus():
    code, text = run("verify")
    assert code == 0, text
