import csv
import io
import json

import pytest

from alexentropy.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_analyze_5_2():
    code, text = run("analyze", "5_2")
    assert code == 0
    doc = json.loads(text)
    assert [e["prime"] for e in doc["entropy_spectrum"]["finite"]] == [2]
    assert doc["entropy_spectrum"]["infinite"]["hi"] == "0.0"
    assert float(doc["mahler_measure"]["mid"]) == pytest.approx(0.6931471805599453)
    assert doc["leading_decomposition"]["holds"]
    assert doc["finitely_generated_obstruction"] == {"no_obstruction": False, "primes": [2]}


def test_analyze_coeffs():
    code, text = run("analyze", "--coeffs", "2,-5,2")
    assert code == 0
    assert float(json.loads(text)["entropy_spectrum"]["grand_total"]["mid"]) == pytest.approx(1.3862943611198906)


def test_analyze_deterministic():
    assert run("analyze", "4_1") == run("analyze", "4_1")


def test_analyze_unknown_knot():
    assert run("analyze", "9_99")[0] == 1
    assert run("analyze")[0] == 1
    assert run("analyze", "--coeffs", "0,0")[0] == 1
    assert run("analyze", "--coeffs", "1,x")[0] == 1


def test_sequence_csv():
    code, text = run("sequence", "3_1", "--rmax", "6")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["r", "order"]
    assert [int(o) for _, o in rows[1:]] == [1, 3, 4, 3, 1, 0]


def test_sequence_json():
    code, text = run("sequence", "4_1", "--rmax", "6", "--json")
    assert json.loads(text)["orders"] == [1, 5, 16, 45, 121, 320]


def test_sequence_rejects_non_knot():
    assert run("sequence", "--coeffs", "1,1", "--rmax", "3")[0] == 1


def test_growth_and_plot_data(tmp_path):
    plot = tmp_path / "g.csv"
    code, text = run("growth", "5_2", "--rmax", "200", "--plot-data", str(plot))
    assert code == 0
    doc = json.loads(text)
    assert not doc["periodic"] and doc["window"] == [100, 200]
    assert float(doc["deviation"]) < 0.01
    rows = list(csv.reader(plot.open()))
    assert rows[0] == ["r", "log_order_over_r", "mahler_midpoint"] and len(rows) == 201


def test_growth_periodic():
    doc = json.loads(run("growth", "3_1", "--rmax", "60")[1])
    assert doc["periodic"] and doc["period"] == 6


def test_growth_bad_window():
    assert run("growth", "5_2", "--rmax", "50", "--window", "1-2")[0] == 1
    assert run("growth", "5_2", "--rmax", "50", "--window", "10:60")[0] == 1


def test_table_check_builtin():
    code, text = run("table-check")
    assert code == 0 and "10/10 knots pass" in text
    doc = json.loads(run("table-check", "builtin", "--json")[1])
    assert all(r["ok"] for r in doc["records"])
    rows = list(csv.DictReader(io.StringIO(run("table-check", "--csv")[1])))
    assert len(rows) == 10


def test_table_check_bad_and_empty(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("bad,1,1\n")
    assert run("table-check", str(bad))[0] == 1
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    assert run("table-check", str(empty))[0] == 1
    assert run("table-check", str(tmp_path / "missing.csv"))[0] == 1


def test_table_check_custom(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("name,c0,c1,c2\nk,3,-5,3\n")
    code, text = run("table-check", str(path))
    assert code == 0 and "1/1" in text
