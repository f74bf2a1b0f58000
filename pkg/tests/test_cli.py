import csv
import json

import numpy as np
import pytest

from bife.cli import main, parse_values, read_samples_csv
from bife.grids import UniformGrid
from bife.refined import RefinedConfig, fine_boundary_nodes
from bife.extension import ExtensionConfig


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _write_samples(path, t, v, with_im=True):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "re", "im"] if with_im else ["t", "re"])
        for x, y in zip(t, v):
            w.writerow([repr(float(x)), repr(float(y.real))] + ([repr(float(y.imag))] if with_im else []))


def test_approximate_plane_wave(capsys):
    assert main(["approximate", "--function", "plane_wave", "--omega", "20", "--M", "500", "--format", "json"]) == 0
    assert _json(capsys)["max_error"] <= 1e-12


def test_constant_file(tmp_path, capsys):
    M = 50
    path = tmp_path / "c.csv"
    _write_samples(path, UniformGrid(M).nodes, np.full(2 * M + 1, 3.0 + 0j), with_im=False)
    out = tmp_path / "run"
    assert main(["approximate", "--input", str(path), "--output", str(out), "--format", "json"]) == 0
    t, v = read_samples_csv(f"{out}_dense.csv")
    assert np.max(np.abs(v - 3)) <= 1e-12


def test_dense_output_round_trips(tmp_path, capsys):
    out = tmp_path / "f1"
    assert main(["approximate", "--function", "f1", "--M", "60", "--output", str(out)]) == 0
    capsys.readouterr()
    assert main(["approximate", "--input", f"{out}_dense.csv", "--function", "f1", "--format", "json"]) == 0
    res = _json(capsys)
    assert res["M"] == 600 and res["max_error"] <= 1e-11
    with open(f"{out}_coefficients.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["k", "re", "im"] and int(rows[1][0]) == -int(rows[-1][0])


def test_refinement_beats_base_on_f12(capsys):
    main(["approximate", "--function", "f12", "--M", "2000", "--R", "4", "--format", "json"])
    fine = _json(capsys)["max_error"]
    main(["approximate", "--function", "f12", "--M", "2000", "--format", "json"])
    assert fine < _json(capsys)["max_error"]


def test_refined_file_input_needs_fine_data(tmp_path, capsys):
    M = 100
    t = UniformGrid(M).nodes
    f = lambda x: np.cos(40 * x) + 0j  # noqa: E731
    path = tmp_path / "s.csv"
    _write_samples(path, t, f(t))
    assert main(["approximate", "--input", str(path), "--R", "2"]) == 2
    rc = RefinedConfig(ExtensionConfig(), 2)
    left, right = fine_boundary_nodes(rc, M)
    fine = tmp_path / "fine.csv"
    xs = np.concatenate((left, right))
    _write_samples(fine, xs, f(xs))
    capsys.readouterr()
    assert main(["approximate", "--input", str(path), "--fine-input", str(fine), "--R", "2", "--format", "json"]) == 0


def test_validation_errors(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,re\n-1,1\n0.3,1\n1,1\n")
    assert main(["approximate", "--input", str(bad)]) == 2
    bad.write_text("x,y\n1,2\n")
    assert main(["approximate", "--input", str(bad)]) == 2
    bad.write_text("t,re\n-1,abc\n0,1\n1,1\n")
    assert main(["approximate", "--input", str(bad)]) == 2
    assert main(["approximate", "--function", "f1", "--M", "100", "--Tdelta", "0.5"]) == 2
    assert main(["approximate", "--function", "f1"]) == 2


def test_resolution_and_failure_exit(capsys):
    assert main(["resolution", "--omega", "20", "--delta", "1e-10", "--format", "json"]) == 0
    assert 20 <= _json(capsys)["M"] <= 140
    assert main(["resolution", "--omega", "20", "--hi", "60"]) == 3


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--param", "R", "--values", "1:3:1", "--omega", "100", "--M", "300", "--output", str(out)]) == 0
    with open(out) as fh:
        rows = list(csv.DictReader(fh))
    assert [float(r["R"]) for r in rows] == [1, 2, 3]
    assert main(["sweep", "--param", "R", "--values", "3,2"]) == 2


def test_sweep_records_failed_points(tmp_path):
    out = tmp_path / "sweep.json"
    assert main(["sweep", "--param", "T", "--values", "0.5,2", "--format", "json", "--output", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert np.isnan(rows[0]["max_error"]) and rows[0]["note"]
    assert rows[1]["max_error"] < 1


def test_cache_verbs(tmp_path, capsys):
    path = tmp_path / "op.txt"
    assert main(["cache", "save", "--path", str(path)]) == 0
    assert main(["cache", "load", "--path", str(path)]) == 0
    assert main(["cache", "load", "--path", str(path), "--mdelta", "30"]) == 2


def test_compare(capsys):
    assert main(["compare", "--function", "f3", "--format", "json"]) == 0
    res = _json(capsys)
    assert res["boundary_error"] <= 1e-10 and res["fulldata_error"] <= 1e-10 and res["max_difference"] <= 1e-9


def test_bench_small(capsys):
    assert main(["bench", "--Ms", "1000,2000", "--repeats", "2"]) == 0
    out = capsys.readouterr()
    assert out.out.splitlines()[0] == "M,seconds,spread"
    assert "loglog_slope" in out.err


def test_parse_values():
    assert parse_values("1:2:0.5") == [1.0, 1.5, 2.0]
    assert parse_values("3,4") == [3.0, 4.0]
    with pytest.raises(ValueError):
        parse_values("1:2:0")
