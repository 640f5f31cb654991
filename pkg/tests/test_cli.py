"""CLI subcommands and exit-code contracts."""

from __future__ import annotations

import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from gatherplot.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_render_happy_path(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "out.svg"
    code, _, err = run(
        [
            "render", str(cars_csv_path),
            "--x", "origin", "--y", "mpg", "--bins", "mpg=5",
            "--mode", "absolute", "-o", str(out),
        ],
        capsys,
    )
    assert code == EXIT_OK, err
    svg = out.read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    ET.fromstring(svg)


def test_render_twice_is_byte_identical(cars_csv_path, tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    args = ["render", str(cars_csv_path), "--x", "origin", "--y", "mpg", "--color", "cylinders"]
    assert run(args + ["-o", str(a)], capsys)[0] == EXIT_OK
    assert run(args + ["-o", str(b)], capsys)[0] == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_render_unknown_dimension_exits_64(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "out.svg"
    code, _, err = run(
        ["render", str(cars_csv_path), "--x", "bogus", "-o", str(out)], capsys
    )
    assert code == EXIT_USAGE
    assert "bogus" in err
    assert not out.exists()


def test_render_relative_mode_tiles_cells(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "rel.svg"
    code, _, _ = run(
        [
            "render", str(cars_csv_path),
            "--x", "origin", "--y", "cylinders", "--mode", "relative", "-o", str(out),
        ],
        capsys,
    )
    assert code == EXIT_OK
    root = ET.fromstring(out.read_text(encoding="utf-8"))
    rects = [el for el in root.iter("{http://www.w3.org/2000/svg}rect")]
    area = sum(float(r.get("width")) * float(r.get("height")) for r in rects)
    # relative mode tiles every non-empty cell completely: the rendered mark
    # area must equal the summed pixel area of the occupied cells
    from gatherplot import AxisConfig, gatherplot, ingest_csv

    ds = ingest_csv(cars_csv_path.read_text(encoding="utf-8"))
    layout = gatherplot(
        ds, AxisConfig(binding="origin"), AxisConfig(binding="cylinders"),
        mode_requested="relative",
    )
    occupied = {m.cell for m in layout.marks}
    expected = sum(
        layout.x_axis.segments[cx].width * layout.y_axis.segments[cy].width
        for cx, cy in occupied
    )
    assert area == pytest.approx(expected, rel=1e-3)


def test_render_bad_csv_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n1\n", encoding="utf-8")
    out = tmp_path / "out.svg"
    code, _, err = run(["render", str(bad), "-o", str(out)], capsys)
    assert code == EXIT_DATA
    assert "line 2" in err


def test_render_missing_file_exits_2(tmp_path, capsys):
    code, _, _ = run(["render", str(tmp_path / "nope.csv"), "-o", str(tmp_path / "o.svg")], capsys)
    assert code == EXIT_DATA


def test_bad_flag_exits_64(cars_csv_path, tmp_path, capsys):
    code, _, _ = run(
        ["render", str(cars_csv_path), "--mode", "diagonal", "-o", str(tmp_path / "o.svg")],
        capsys,
    )
    assert code == EXIT_USAGE


def test_ingest_prints_schema(cars_csv_path, capsys):
    code, out, _ = run(["ingest", str(cars_csv_path)], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["rows"] == 240
    kinds = {d["name"]: d["kind"] for d in doc["dimensions"]}
    assert kinds["origin"] == "nominal"
    assert kinds["cylinders"] == "ordinal"
    assert kinds["mpg"] == "quantitative"


def test_stats_command(tmp_path, capsys):
    csv = tmp_path / "pts.csv"
    csv.write_text("x,y\n3.5,7.25\n3.5,7.25\n", encoding="utf-8")
    code, out, _ = run(["stats", str(csv), "--x", "x", "--y", "y", "--mark-size", "1"], capsys)
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc == {"overplotting": 1, "points": 2, "x_overlap": 1, "y_overlap": 1}


def test_matrix_command(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "matrix.svg"
    code, _, _ = run(
        ["matrix", str(cars_csv_path), "--dims", "displacement,mpg", "-o", str(out)], capsys
    )
    assert code == EXIT_OK
    root = ET.fromstring(out.read_text(encoding="utf-8"))
    panels = [g for g in root.iter("{http://www.w3.org/2000/svg}g") if g.get("class") == "panel"]
    assert len(panels) == 9


def test_matrix_unknown_dimension(cars_csv_path, tmp_path, capsys):
    code, _, err = run(
        ["matrix", str(cars_csv_path), "--dims", "nope", "-o", str(tmp_path / "m.svg")], capsys
    )
    assert code == EXIT_USAGE
    assert "nope" in err


def test_keyframes_command(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "frames.json"
    code, _, err = run(
        [
            "keyframes", str(cars_csv_path),
            "--from", "x=origin",
            "--to", "x=origin&y=cylinders",
            "--duration", "1000", "--fps", "2",
            "-o", str(out),
        ],
        capsys,
    )
    assert code == EXIT_OK, err
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert len(doc["frames"]) == 3
    first, last = doc["frames"][0], doc["frames"][-1]
    assert len(first["marks"]) == 240
    assert first["y_axis"][0]["label"] == "all"
    assert len(last["y_axis"]) == 5


def test_fold_flag(cars_csv_path, tmp_path, capsys):
    out = tmp_path / "fold.svg"
    code, _, err = run(
        [
            "render", str(cars_csv_path),
            "--x", "origin", "--y", "cylinders",
            "--fold", "x:Europe:minimized",
            "-o", str(out),
        ],
        capsys,
    )
    assert code == EXIT_OK, err
    assert out.exists()


def test_fold_flag_malformed(cars_csv_path, tmp_path, capsys):
    code, _, _ = run(
        ["render", str(cars_csv_path), "--fold", "broken", "-o", str(tmp_path / "o.svg")],
        capsys,
    )
    assert code == EXIT_USAGE


def test_port_resolution(monkeypatch):
    from gatherplot.cli import resolve_port

    monkeypatch.delenv("GATHERPLOT_PORT", raising=False)
    assert resolve_port(None) == 8080
    monkeypatch.setenv("GATHERPLOT_PORT", "9100")
    assert resolve_port(None) == 9100
    assert resolve_port(7001) == 7001
