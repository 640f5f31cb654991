"""Acceptance suite: one test per release criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  Every tolerance is pinned here; nothing is deferred.
"""

from __future__ import annotations

import itertools
import random
import time

import numpy as np
import pytest

from gatherplot import (
    AxisConfig,
    DataPoint,
    Dataset,
    Dimension,
    TransitionPlan,
    absolute_mark_size,
    gatherplot,
    gatherplot_matrix,
    ingest_csv,
    interpolate,
    layout_cell,
    overlap_index,
    overplotting_index,
    segment_axis,
    segment_domain,
    select_mode,
)
from gatherplot.cli import EXIT_OK, main as cli_main
from gatherplot.layout import FOLD_W, LayoutMode, fold_segment
from gatherplot.request import PlotRequest, compute_layout
from gatherplot.scales import VisualTransformation
from gatherplot.serialize import layout_json

from test_layout import oracle_mark_size


def _pass(name: str) -> None:
    print(f"PASS: {name}")


def _brute_intersections(marks) -> int:
    """O(n^2) strict rectangle-intersection count, vectorized per row."""
    x = np.array([m.x for m in marks])
    y = np.array([m.y for m in marks])
    w = np.array([m.w for m in marks])
    h = np.array([m.h for m in marks])
    total = 0
    for i in range(len(marks) - 1):
        sl = slice(i + 1, None)
        overlap_x = (x[i] + w[i] > x[sl]) & (x[sl] + w[sl] > x[i])
        overlap_y = (y[i] + h[i] > y[sl]) & (y[sl] + h[sl] > y[i])
        total += int(np.count_nonzero(overlap_x & overlap_y))
    return total


def _random_quantitative_dataset(n: int, seed: int) -> Dataset:
    rng = random.Random(seed)
    points = []
    xs, ys = [], []
    for i in range(n):
        xv, yv = rng.random(), rng.random()
        xs.append(xv)
        ys.append(yv)
        points.append(DataPoint(i, {"x": xv, "y": yv}))
    dims = (
        Dimension("x", "quantitative", (min(xs), max(xs))),
        Dimension("y", "quantitative", (min(ys), max(ys))),
    )
    return Dataset(tuple(points), dims, {"x": 0, "y": 0})


def test_zero_overlap_five_thousand_points():
    """5,000 uniform random 2D points, both axes quantized, absolute mode:
    zero intersecting mark pairs; layout computed in under a second."""
    ds = _random_quantitative_dataset(5000, seed=1)
    t0 = time.perf_counter()
    layout = gatherplot(ds, AxisConfig(binding="x"), AxisConfig(binding="y"))
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0, f"layout took {elapsed:.3f}s"
    assert layout.mode.effective == "absolute"
    assert len(layout.marks) == 5000
    assert _brute_intersections(layout.marks) == 0
    _pass(f"zero-overlap guarantee (5,000 marks, layout {elapsed * 1000:.0f} ms)")


def test_metric_correctness_against_brute_force():
    """overlap/overplotting indices match an independent pair oracle on 200
    random instances (n <= 50), exactly; the nominal-unique and
    continuous-close properties hold."""
    rng = random.Random(99)
    ident = lambda v: v  # noqa: E731
    for _ in range(200):
        n = rng.randint(0, 50)
        pts = [(rng.uniform(0, 40), rng.uniform(0, 40)) for _ in range(n)]
        sx, sy = rng.uniform(0.2, 8), rng.uniform(0.2, 8)
        tx, ty = VisualTransformation(ident, sx), VisualTransformation(ident, sy)
        exp_x = sum(
            1 for a, b in itertools.combinations(pts, 2) if abs(a[0] - b[0]) < sx
        )
        exp_both = sum(
            1
            for a, b in itertools.combinations(pts, 2)
            if abs(a[0] - b[0]) < sx and abs(a[1] - b[1]) < sy
        )
        assert overlap_index([p[0] for p in pts], tx) == exp_x
        assert overplotting_index(pts, tx, ty) == exp_both

    # one instance per nominal value: no overplotting
    unique_nominal = [(float(i * 50), rng.uniform(0, 1)) for i in range(10)]
    tx = VisualTransformation(ident, 8.0)
    ty = VisualTransformation(ident, 8.0)
    assert overplotting_index(unique_nominal, tx, ty) == 0
    # a continuous pair closer than the mark size overplots
    close = [(10.0, 10.0), (10.5, 10.3)]
    assert overplotting_index(close, tx, ty) >= 1
    _pass("overlap/overplotting metrics (200 random instances, exact)")


def test_packing_optimality_against_oracle():
    """absolute_mark_size returns the oracle-maximal size on 500 random
    (cell, count) instances, exact float equality."""
    rng = random.Random(41)
    for _ in range(500):
        w = rng.randint(4, 500)
        h = rng.randint(4, 500)
        count = rng.randint(1, 400)
        assert absolute_mark_size((w, h), count) == oracle_mark_size(w, h, count)
    _pass("packing optimality (500 random instances, exact)")


def test_relative_mode_proportionality():
    """Subgroup area fraction equals count fraction in randomized splits
    across 100 cells, within 1 px per mark edge of rounding."""
    rng = random.Random(13)
    mode = LayoutMode("relative", "relative", False)
    for _ in range(100):
        w = rng.randint(20, 400)
        h = rng.randint(20, 400)
        total = rng.randint(2, 80)
        split = rng.randint(1, total - 1)
        members = [(i, "c0" if i < split else "c1") for i in range(total)]
        marks = layout_cell((0, 0, w, h), members, mode, None)
        area_a = sum(m.w * m.h for m in marks if m.fill == "c0")
        cell_area = w * h
        got = area_a / cell_area
        want = split / total
        # stated tolerance: one pixel of rounding per mark edge
        slack = sum(m.w + m.h + 1 for m in marks if m.fill == "c0") / cell_area
        assert abs(got - want) <= slack
        # the construction is exact, so the much tighter bound holds too
        assert got == pytest.approx(want, abs=1e-9)
    _pass("relative-mode proportionality (100 random cells)")


def test_mode_heuristic_sweep():
    """Streamgraph activates exactly for aspect > 3 when absolute is
    requested."""
    for aspect in (0.5, 1, 2, 3, 3.01, 4, 8):
        mode = select_mode("absolute", aspect)
        assert (mode.effective == "streamgraph") == (aspect > 3), aspect
        assert mode.requested == "absolute"
    _pass("mode heuristic (aspect sweep at threshold 3)")


def test_matrix_shape_and_all_points_panel(cars):
    """Two dimensions give a 3x3 matrix; the undefined-by-undefined panel
    holds every point in one stacked group."""
    grid = gatherplot_matrix(cars, ["displacement", "mpg"], cell_size=(220, 220))
    assert len(grid) == 3 and all(len(row) == 3 for row in grid)
    corner = grid[0][0]
    assert len(corner.marks) == len(cars.points)
    assert {m.cell for m in corner.marks} == {(0, 0)}
    assert len(corner.x_axis) == 1 and len(corner.y_axis) == 1
    _pass("matrix shape (3x3 with all-points corner panel)")


def test_transition_constancy_random_pairs(cars):
    """50 random layout pairs over the same dataset: every sampled frame
    preserves the id bijection; endpoint frames are bit-equal."""
    rng = random.Random(2024)
    bindings = [None, "origin", "cylinders", "mpg", "weight", "model_year", "acceleration"]
    layouts = []
    for _ in range(12):
        layouts.append(
            gatherplot(
                cars,
                AxisConfig(binding=rng.choice(bindings)),
                AxisConfig(binding=rng.choice(bindings)),
                color=rng.choice([None, "origin", "cylinders"]),
                mode_requested=rng.choice(["absolute", "relative"]),
            )
        )
    ids = layouts[0].point_ids
    pairs = 0
    while pairs < 50:
        a, b = rng.sample(layouts, 2)
        plan = TransitionPlan(a, b, easing=rng.choice(["linear", "cubic-in-out"]))
        assert interpolate(plan, 0) is a
        assert interpolate(plan, 1) is b
        assert layout_json(interpolate(plan, 0)) == layout_json(a)
        assert layout_json(interpolate(plan, 1)) == layout_json(b)
        for t in (0.2, 0.5, 0.8, rng.random()):
            assert interpolate(plan, t).point_ids == ids
        pairs += 1
    _pass("transition constancy (50 random pairs)")


def test_determinism_cli_and_service(cars_csv_path, tmp_path, capsys):
    """CLI render of the cars dataset twice is byte-identical; the service
    layout body equals the library's canonical JSON byte for byte."""
    args = [
        "render", str(cars_csv_path),
        "--x", "origin", "--y", "mpg", "--color", "cylinders", "--bins", "mpg=5",
    ]
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert cli_main(args + ["-o", str(a)]) == EXIT_OK
    assert cli_main(args + ["-o", str(b)]) == EXIT_OK
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()

    from fastapi.testclient import TestClient

    from gatherplot.service import app

    client = TestClient(app)
    csv_text = cars_csv_path.read_text(encoding="utf-8")
    ds_id = client.post(
        "/datasets", content=csv_text, headers={"content-type": "text/csv"}
    ).json()["id"]
    resp = client.get(
        f"/datasets/{ds_id}/layout",
        params=[("x", "origin"), ("y", "mpg"), ("color", "cylinders"), ("bin", "mpg:5")],
    )
    dataset = ingest_csv(csv_text)
    req = PlotRequest(x="origin", y="mpg", color="cylinders", bins={"mpg": 5})
    expected = layout_json(compute_layout(dataset, req)).encode("utf-8")
    assert resp.content == expected
    _pass("determinism (CLI byte-identical; service equals library)")


def test_axis_folding_widths_and_restore(cars):
    """Minimizing k of n segments leaves n-k segments sharing
    extent - k*FOLD_W; maximizing minimizes all others; restoring
    reproduces the original segmentation exactly."""
    dom = segment_domain(cars, cars.dimension("cylinders"))
    n = len(dom.segments)
    extent = (0, 424)
    labels = list(dom.labels)
    original = segment_axis(AxisConfig(binding="cylinders"), dom, extent)

    cfg = AxisConfig(binding="cylinders")
    for k in (1, 2, 3):
        folded_cfg = cfg
        for label in labels[:k]:
            folded_cfg = fold_segment(folded_cfg, labels, label, "minimized")
        segs = segment_axis(folded_cfg, dom, extent)
        minimized = [s for s in segs if s.state == "minimized"]
        normal = [s for s in segs if s.state == "normal"]
        assert len(minimized) == k and len(normal) == n - k
        assert all(s.width == FOLD_W for s in minimized)
        assert sum(s.width for s in normal) == (extent[1] - extent[0]) - k * FOLD_W

    maxed_cfg = fold_segment(cfg, labels, labels[2], "maximized")
    segs = segment_axis(maxed_cfg, dom, extent)
    states = {s.segment.label: s.state for s in segs}
    assert states[labels[2]] == "maximized"
    assert all(v == "minimized" for lbl, v in states.items() if lbl != labels[2])
    big = next(s for s in segs if s.state == "maximized")
    assert big.width == (extent[1] - extent[0]) - (n - 1) * FOLD_W

    restored_cfg = fold_segment(maxed_cfg, labels, labels[2], "normal")
    assert restored_cfg == cfg
    assert segment_axis(restored_cfg, dom, extent) == original
    _pass("axis folding (fold widths, maximize, exact restore)")
