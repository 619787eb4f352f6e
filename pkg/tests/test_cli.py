import csv
import io
import subprocess
import sys

import pytest

from quadbif.cli import main


def run(args, capsys):
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_orbit_chaotic(capsys):
    code, out, _ = run(["orbit", "--a", "1.9", "--x0", "0.2", "--n", "50"], capsys)
    assert code == 0
    r = rows(out)
    assert r[0] == ["n", "x"]
    assert len(r) == 52
    assert r[1] == ["0", "0.2"]
    assert r[2] == ["1", "1.8599999999999999"]


def test_orbit_preimage_seeded(capsys):
    code, out, _ = run(["orbit", "--a", "1.9", "--seed", "preimage-pos", "--n", "200"], capsys)
    assert code == 0
    assert len(rows(out)) == 202


def test_orbit_domain_error(capsys):
    code, _, err = run(["orbit", "--a", "-1", "--seed", "preimage-pos"], capsys)
    assert code == 1
    assert "NoRealFixedPoint" in err


def test_orbit_high_precision(capsys):
    code, out, _ = run(["orbit", "--a", "2", "--x0", "0.5", "--n", "3", "--precision", "bits:113"], capsys)
    assert code == 0
    assert [row[1] for row in rows(out)[1:]] == ["0.5", "1.75", "-1.0625", "0.87109375"]


@pytest.mark.parametrize(
    "argv",
    [
        ["orbit", "--a", "1,9"],
        ["orbit", "--a", "1.9", "--n", "-3"],
        ["orbit", "--a", "1.9", "--seed", "banana"],
        ["orbit", "--a", "1.9", "--precision", "bits:1"],
        ["orbit", "--a", "1.9", "--x0", "0.1", "--seed", "preimage-pos"],
        ["diagram", "--a-min", "2", "--a-max", "1"],
        ["diagram", "--a-min", "-0.5", "--seed", "preimage-pos"],
        ["diagram", "--samples", "0"],
        ["divergence", "--a", "1.9", "--tolerance", "0"],
        ["divergence", "--a", "1.9", "--precisions", "53,x"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_comma_hint(capsys):
    with pytest.raises(SystemExit):
        main(["orbit", "--a", "1,9"])
    assert "decimal point" in capsys.readouterr().err


def test_diagram_csv_schema(capsys):
    code, out, _ = run(
        ["diagram", "--a-min", "1", "--a-max", "2", "--samples", "5", "--transient", "10", "--keep", "3"],
        capsys,
    )
    assert code == 0
    r = rows(out)
    assert r[0] == ["a", "n", "x", "escaped"]
    assert len(r) == 16
    assert [row[0] for row in r[1:4]] == ["1.0"] * 3
    assert {row[3] for row in r[1:]} == {"0"}
    assert "\r" not in out


def test_diagram_first_iterate(capsys):
    code, out, _ = run(["diagram", "--seed", "preimage-pos", "--first-iterate-only"], capsys)
    assert code == 0
    assert len(rows(out)) == 2001


def test_diagram_escape_rows(capsys):
    code, out, _ = run(["diagram", "--a-min", "2.1", "--a-max", "2.4", "--samples", "3"], capsys)
    assert code == 0
    r = rows(out)[1:]
    assert len(r) == 3 and all(row[3] == "1" for row in r)


def test_svg_marker_count_matches_csv(tmp_path):
    base = ["diagram", "--a-min", "0.5", "--a-max", "2", "--samples", "40", "--transient", "50", "--keep", "6"]
    csv_path, svg_path = tmp_path / "d.csv", tmp_path / "d.svg"
    assert main(base + ["-o", str(csv_path)]) == 0
    assert main(base + ["--format", "svg", "-o", str(svg_path)]) == 0
    n_rows = len(csv_path.read_text().splitlines()) - 1
    svg = svg_path.read_text()
    assert svg.startswith("<svg") or svg.startswith("<?xml")
    assert svg.count('class="pt"') == n_rows == 240
    assert 'width="800"' in svg and 'height="600"' in svg


def test_orbit_svg(capsys):
    code, out, _ = run(["orbit", "--a", "1.9", "--n", "50", "--format", "svg"], capsys)
    assert code == 0
    assert out.count('class="pt"') == 51


def test_divergence_rows(capsys):
    code, out, _ = run(["divergence", "--a", "1.9", "--precisions", "53,113,256", "--n-max", "200"], capsys)
    assert code == 0
    r = rows(out)
    assert r[0] == ["a", "bits", "divergence_index", "max_deviation_before"]
    assert [row[1] for row in r[1:]] == ["53", "113", "256"]
    assert 30 <= int(r[1][2]) <= 120
    assert r[3][2] == ""


@pytest.mark.parametrize("a", ["2", "0.5"])
def test_divergence_empty_index(a, capsys):
    code, out, _ = run(["divergence", "--a", a, "--precisions", "double"], capsys)
    assert code == 0
    assert rows(out)[1][2] == ""


def test_fixed_points(capsys):
    _, out, _ = run(["fixed-points", "--a", "2"], capsys)
    assert rows(out) == [
        ["quantity", "value"], ["x_plus", "1.0"], ["x_minus", "-2.0"],
        ["seed_positive", "1.0"], ["seed_negative", "-1.0"],
    ]
    _, out, _ = run(["fixed-points", "--a", "0"], capsys)
    assert [row[1] for row in rows(out)[1:]] == ["0.0", "-1.0", "0.0", "-0.0"]
    _, out, _ = run(["fixed-points", "--a", "1.9"], capsys)
    vals = [float(row[1]) for row in rows(out)[1:]]
    assert abs(vals[0] - 0.9662878) < 1e-7 and abs(vals[1] + 1.9662878) < 1e-7
    code, _, _ = run(["fixed-points", "--a", "-1"], capsys)
    assert code == 1


def test_fixed_points_quad_precision(capsys):
    _, out, _ = run(["fixed-points", "--a", "2", "--precision", "quad"], capsys)
    assert rows(out)[1] == ["x_plus", "1.0"]
    _, out, _ = run(["fixed-points", "--a", "1.9", "--precision", "bits:113"], capsys)
    assert rows(out)[1] == ["x_plus", "0.966287829861517984215616370931678"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quadbif", "fixed-points", "--a", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("quantity,value\n")


def test_jobs_byte_identical(tmp_path):
    base = ["diagram", "--seed", "preimage-pos", "--a-min", "1", "--a-max", "2", "--samples", "300"]
    p1, p2 = tmp_path / "1.csv", tmp_path / "2.csv"
    main(base + ["-j", "1", "-o", str(p1)])
    main(base + ["-j", "4", "-o", str(p2)])
    assert p1.read_bytes() == p2.read_bytes()
