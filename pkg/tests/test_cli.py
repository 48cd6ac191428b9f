import csv
import io
import json
import math
import subprocess
import sys

import pytest

from cutfock.cli import build_parser, config_from_args, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_spectrum_single_point(capsys):
    code, out, _ = run(capsys, "spectrum", "--d", "3", "--nb", "0")
    assert code == 0
    table = rows(out)
    assert table[0][:2] == ["N_B", "E1"] and len(table) == 2
    assert float(table[1][1]) == 1.5


def test_spectrum_d2(capsys):
    _, out, _ = run(capsys, "spectrum", "--d", "2", "--nb", "2", "--count", "2")
    e = [float(v) for v in rows(out)[1][1:]]
    assert e == pytest.approx([2 - math.sqrt(2), 2 + math.sqrt(2)], abs=1e-12)


def test_figure1_preset(capsys):
    _, out, _ = run(capsys, "spectrum", "--preset", "figure1")
    table = rows(out)[1:]
    assert [int(r[0]) for r in table] == list(range(61))
    assert len(table[0]) == 13
    last = [float(v) for v in table[-1][1:]]
    assert max(last) < 30


def test_sturm_and_analytic_agree(capsys):
    _, a, _ = run(capsys, "spectrum", "--d", "5", "--nb-range", "0:20", "--format", "json")
    _, s, _ = run(capsys, "spectrum", "--d", "5", "--nb-range", "0:20", "--format", "json", "--method", "sturm")
    ra, rs = json.loads(a)["rows"], json.loads(s)["rows"]
    for x, y in zip(ra, rs):
        for u, v in zip(x, y):
            assert (u is None and v is None) or abs(u - v) < 1e-9


def test_count(capsys):
    _, out, _ = run(capsys, "count", "--d", "3", "--nb", "6")
    assert [int(r[1]) for r in rows(out)[1:]] == [1, 0, 1, 0, 1, 0, 1]
    _, out, _ = run(capsys, "count", "--d", "5", "--sector", "vector", "--nb", "3")
    assert [int(r[1]) for r in rows(out)[1:]] == [0, 1, 0, 1]
    for d in (2, 6, 9):
        _, out, _ = run(capsys, "count", "--d", str(d), "--nb", "0")
        assert int(rows(out)[1][1]) == 1


def test_wavefunction_and_reconstruct(capsys):
    _, out, _ = run(capsys, "wavefunction", "--d", "3", "--nb", "40", "--points", "21")
    table = rows(out)
    assert table[0] == ["r", "value", "bessel_target"] and len(table) == 22
    _, out, _ = run(capsys, "reconstruct", "--terms", "2000", "--format", "dat")
    lines = out.splitlines()
    assert lines[0] == "# r value bessel_target"
    ratios = [float(a) / float(b) for _, a, b in (line.split() for line in lines[1:])]
    assert max(ratios) - min(ratios) < 0.01 * abs(sum(ratios) / len(ratios))


def test_reconstruct_partial(capsys):
    code, out, _ = run(capsys, "reconstruct", "--terms", "10", "--summation", "partial", "--format", "json")
    assert code == 0 and json.loads(out)["meta"]["summation"] == "partial"


def test_eigenvector(capsys):
    _, out, _ = run(capsys, "eigenvector", "--d", "3", "--nb", "8", "--index", "2", "--normalization", "a0")
    assert float(rows(out)[1][1]) == pytest.approx(1.0)
    _, out, _ = run(capsys, "eigenvector", "--d", "3", "--nb", "8", "--index", "2")
    assert sum(float(r[1]) ** 2 for r in rows(out)[1:]) == pytest.approx(1.0)


def test_matrix(capsys):
    _, out, _ = run(capsys, "matrix", "--d", "3", "--nb", "2")
    assert rows(out)[1:] == [["0", "1.5", repr(-math.sqrt(1.5))], ["1", "3.5", ""]]


def test_table2_preset(capsys):
    _, out, _ = run(capsys, "scaling", "--preset", "table2", "--format", "json")
    doc = json.loads(out)
    by_d = {r[0]: r for r in doc["rows"]}
    assert by_d[1][1] == pytest.approx(math.pi, abs=1e-6) and by_d[1][3] == pytest.approx(-math.pi / 2, abs=1e-6)
    assert by_d[3][3] == pytest.approx(0.0, abs=1e-6)
    assert abs(by_d[9][3] - 4.62) / 4.62 < 0.05
    assert doc["meta"]["fit_range"] == [1, 300]


def test_figure2_preset(capsys):
    _, out, _ = run(capsys, "scaling", "--preset", "figure2", "--format", "json")
    meta = json.loads(out)["meta"]
    assert meta["r2_d1"] > 0.9999 and meta["r2_d150"] < 0.999


def test_scaling_plain(capsys):
    _, out, _ = run(capsys, "scaling", "--d", "3", "--nb", "400", "--count", "3")
    for r in rows(out)[1:]:
        assert float(r[2]) == pytest.approx(float(r[3]), rel=0.01)


def test_json_metadata(capsys):
    _, out, _ = run(capsys, "spectrum", "--d", "4", "--sector", "vector", "--nb", "3",
                    "--vector-cutoff-convention", "strict", "--format", "json")
    meta = json.loads(out)["meta"]
    assert meta["vector_cutoff"] == "strict" and meta["sector"] == "vector" and "version" in meta


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--preset", "figure1", "--format", "dat"],
        ["count", "--d", "4", "--nb", "8", "--format", "json"],
        ["scaling", "--preset", "table2"],
        ["reconstruct", "--terms", "300"],
    ],
)
def test_deterministic_files(tmp_path, argv):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--nb-range", "5:2"],
        ["spectrum", "--bogus"],
        ["count", "--d", "1"],
        ["spectrum", "--out", "/nonexistent-dir/x.csv"],
        ["wavefunction", "--nb", "4", "--index", "9"],
        ["spectrum", "--d", "0"],
        ["eigenvector", "--nb", "4", "--index", "0"],
        [],
    ],
)
def test_errors_are_one_line(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code != 0 and out == ""
    lines = err.strip().splitlines()
    assert len(lines) == 1 and lines[0].startswith("error: ")


def test_defaults_validated():
    cfg = config_from_args(build_parser().parse_args(["spectrum"]))
    assert cfg.d == 3 and cfg.nb_range == (0, 0) and cfg.fmt == "csv" and cfg.terms == 4000


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cutfock", "count", "--d", "3", "--nb", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.splitlines()[0].startswith("N_B,")
