"""The gather layout engine.

Gathering replaces a continuous axis scale with an ordered run of
contiguous pixel segments, one per distinct (or quantized) value, and
packs the marks that share a (x-segment, y-segment) cell into a stacked
group instead of letting them overlap.  This module segments axes,
selects a layout mode, sizes marks, packs cells, folds segments, and
composes whole plots and plot matrices.

Geometry note: mark sizes and block origins in the packed modes are
snapped to a 2^-21 px grid.  Products and sums of such values are exact
in double precision, so adjacent marks share edges exactly and a strict
rectangle-intersection test over any packed layout finds no overlap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Literal, Mapping, Sequence

from .data import Dataset, Dimension, Interval, Segment, SegmentedDomain, Value, format_number, segment_domain
from .errors import ConfigError, NoGatherAxisError
from .scales import jitter_offset, linear_transform

TransformKind = Literal["scatter", "jitter", "gather"]
AllocationKind = Literal["uniform", "proportional"]
FoldState = Literal["normal", "minimized", "maximized"]
ModeName = Literal["absolute", "relative", "streamgraph"]

# Pixel width of a minimized (folded) segment.
FOLD_W = 12
# Cap on mark corner rounding; marks at or below this size render as circles.
CORNER_R = 6
# Cells with max(w,h)/min(w,h) above this switch from absolute to streamgraph.
ASPECT_LIMIT = 3.0
# Mark size used on value-positioned (scatter/jitter) axes.
SCATTER_MARK = 8.0
# Plot-area insets inside the canvas; axis brackets and labels live in them.
MARGIN_LEFT = 56
MARGIN_RIGHT = 12
MARGIN_TOP = 12
MARGIN_BOTTOM = 44

_SNAP = 1 << 21
_Q = 1.0 / _SNAP
# Absolute slack when counting how many marks fit along an extent, so that
# exact divisions are not lost to float rounding.
_FIT_EPS = 1e-6


def _snap_down(v: float) -> float:
    return math.floor(v * _SNAP) / _SNAP


@dataclass(frozen=True)
class AxisConfig:
    """Binding of one graphical axis to a dimension and its gather options.

    ``binding`` None means the undefined axis: every point lands in one
    all-values segment.  ``folds`` maps segment labels to fold states; at
    most one segment may be maximized.  Proportional allocation only makes
    sense when the axis gathers.
    """

    binding: str | None = None
    transform: TransformKind = "gather"
    allocation: AllocationKind = "uniform"
    folds: Mapping[str, FoldState] = field(default_factory=dict)
    segment_order: tuple[Value, ...] | None = None
    bin_width: float | None = None
    bin_origin: float | None = None
    jitter_amplitude: float | None = None
    jitter_seed: int = 0

    @property
    def gathers(self) -> bool:
        return self.binding is None or self.transform == "gather"

    def validate(self) -> None:
        if sum(1 for s in self.folds.values() if s == "maximized") > 1:
            raise ConfigError("at most one segment may be maximized per axis")
        if self.allocation == "proportional" and not self.gathers:
            raise ConfigError("proportional allocation requires a gather transform")
        if self.folds and not self.gathers:
            raise ConfigError("folds apply only to gather axes")


@dataclass(frozen=True)
class PlacedSegment:
    """A segment with its pixel interval [lo, hi) and fold state."""

    segment: Segment
    lo: float
    hi: float
    state: FoldState

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class AxisSegments:
    """Ordered placed segments covering one axis extent."""

    segments: tuple[PlacedSegment, ...]

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.segment.label for s in self.segments)

    @property
    def extent(self) -> tuple[float, float]:
        return (min(s.lo for s in self.segments), max(s.hi for s in self.segments))


@dataclass(frozen=True)
class LayoutMode:
    requested: Literal["absolute", "relative"]
    effective: ModeName
    auto_switched: bool


@dataclass(frozen=True)
class MarkPlacement:
    """One data point resolved to a pixel rectangle."""

    point_id: int
    cell: tuple[int, int]
    x: float
    y: float
    w: float
    h: float
    corner_radius: float
    fill: str


@dataclass(frozen=True)
class Layout:
    marks: tuple[MarkPlacement, ...]
    x_axis: AxisSegments
    y_axis: AxisSegments
    mode: LayoutMode
    canvas: tuple[int, int]

    @property
    def point_ids(self) -> frozenset[int]:
        return frozenset(m.point_id for m in self.marks)


def _largest_remainder(ideals: Sequence[float], total: int) -> list[int]:
    """Snap real widths to integers that sum exactly to ``total``."""
    floors = [math.floor(x) for x in ideals]
    leftover = total - sum(floors)
    order = sorted(range(len(ideals)), key=lambda i: (-(ideals[i] - floors[i]), i))
    for i in order[:leftover]:
        floors[i] += 1
    return floors


def segment_axis(
    cfg: AxisConfig,
    domain: SegmentedDomain,
    extent: tuple[int, int],
) -> AxisSegments:
    """Allocate pixel intervals to a domain's segments over ``extent``.

    Minimized segments get the fixed FOLD_W strip; one maximized segment
    forces every other segment to a strip.  The remaining width is split
    equally (uniform) or by segment count (proportional, with a 1 px floor
    for non-empty segments) and snapped to integers by largest remainder so
    the widths sum exactly to the extent.
    """
    lo, hi = extent
    width = hi - lo
    if width <= 0:
        raise ConfigError("axis extent must be non-degenerate")
    labels = list(domain.labels)
    for name in cfg.folds:
        if name not in labels:
            raise ValueError(f"unknown segment label {name!r} on this axis")
    states = [cfg.folds.get(name, "normal") for name in labels]
    if "maximized" in states:
        keep = states.index("maximized")
        states = ["maximized" if i == keep else "minimized" for i in range(len(states))]
    flex_idx = [i for i, s in enumerate(states) if s != "minimized"]
    if not flex_idx:
        raise ConfigError("cannot minimize every segment on an axis")
    flexible = width - FOLD_W * (len(states) - len(flex_idx))
    if flexible < len(flex_idx):
        raise ConfigError("axis extent too small for the requested folds")

    if cfg.allocation == "proportional":
        counts = [domain.segments[i].count for i in flex_idx]
        nonzero = sum(1 for c in counts if c > 0)
        total = sum(counts)
        if total == 0:
            ideals = [flexible / len(flex_idx)] * len(flex_idx)
        else:
            if flexible < nonzero:
                raise ConfigError("axis extent too small for proportional allocation")
            spread = flexible - nonzero
            ideals = [(1 + spread * c / total) if c > 0 else 0.0 for c in counts]
    else:
        ideals = [flexible / len(flex_idx)] * len(flex_idx)
    flex_widths = _largest_remainder(ideals, flexible)

    widths = [0] * len(states)
    for i, s in enumerate(states):
        widths[i] = FOLD_W if s == "minimized" else flex_widths[flex_idx.index(i)]
    placed = []
    cursor = lo
    for seg, state, w in zip(domain.segments, states, widths):
        placed.append(PlacedSegment(seg, cursor, cursor + w, state))
        cursor += w
    return AxisSegments(tuple(placed))


def select_mode(requested: Literal["absolute", "relative"], cell_aspect: float) -> LayoutMode:
    """Relative stays relative; absolute switches to streamgraph above the
    aspect threshold (strictly greater than ASPECT_LIMIT)."""
    if cell_aspect <= 0:
        raise ValueError("cell aspect must be positive")
    if requested == "relative":
        return LayoutMode("relative", "relative", False)
    if cell_aspect > ASPECT_LIMIT:
        return LayoutMode("absolute", "streamgraph", True)
    return LayoutMode("absolute", "absolute", False)


def absolute_mark_size(cell: tuple[float, float], count: int) -> float:
    """Largest square mark size whose grid capacity in ``cell`` holds
    ``count`` marks.

    The optimum always lies on a capacity step, i.e. at w/i or h/j for
    integer i, j, so scanning those candidates is exhaustive.
    """
    w, h = cell
    if w <= 0 or h <= 0:
        raise ConfigError("cell must have positive area")
    if count < 1:
        raise ValueError("count must be at least 1")
    best = 0.0
    for i in range(1, count + 1):
        for s in (w / i, h / i):
            if s <= best:
                continue
            cols = math.floor((w + _FIT_EPS) / s)
            rows = math.floor((h + _FIT_EPS) / s)
            if cols * rows >= count:
                best = s
    return best


def _mark(pid: int, cell_index: tuple[int, int], x: float, y: float, w: float, h: float, fill: str) -> MarkPlacement:
    r = min(w, h, CORNER_R) / 2
    return MarkPlacement(pid, cell_index, float(x), float(y), float(w), float(h), float(r), fill)


Member = tuple[int, str]  # (point_id, fill token)


def _grid_block(
    cell: tuple[float, float, float, float],
    members: Sequence[Member],
    cell_index: tuple[int, int],
    s: float,
    ncols: int,
    nrows: int,
    column_major: bool,
) -> list[MarkPlacement]:
    """Pack members on an ncols x nrows grid of pitch s, block centered in
    the cell, filling from the bottom-left."""
    cx, cy, cw, ch = cell
    while ncols * s > cw or nrows * s > ch:
        s -= _Q
    if s <= 0:
        raise ConfigError("cell too small to pack its members")
    ox = cx + _snap_down((cw - ncols * s) / 2)
    oy = cy + _snap_down((ch - nrows * s) / 2)
    out = []
    for k, (pid, fill) in enumerate(members):
        if column_major:
            col, row = divmod(k, nrows)
        else:
            row, col = divmod(k, ncols)
        x = ox + col * s
        y = oy + (nrows - 1 - row) * s
        out.append(_mark(pid, cell_index, x, y, s, s, fill))
    return out


def layout_cell(
    cell: tuple[float, float, float, float],
    members: Sequence[Member],
    mode: LayoutMode,
    mark_size: float | None,
    cell_index: tuple[int, int] = (0, 0),
) -> list[MarkPlacement]:
    """Lay out one stacked group inside its cell.

    absolute    -- square marks of the global ``mark_size`` on a grid whose
                   shape follows the cell aspect, block centered, filled
                   row-major from the bottom-left;
    relative    -- members stretched into equal-area rectangles that tile
                   the cell exactly, bottom rows first;
    streamgraph -- a fixed count k = ceil(sqrt(n / aspect)) of marks along
                   the shorter cell edge, run-length along the longer edge,
                   block centered.
    """
    cx, cy, cw, ch = cell
    c = len(members)
    if c == 0:
        return []
    if cw <= 0 or ch <= 0:
        raise ConfigError("cell must have positive area")

    if mode.effective == "relative":
        nrows = max(1, min(c, round(math.sqrt(c * ch / cw))))
        base, extra = divmod(c, nrows)
        row_counts = [base + 1] * extra + [base] * (nrows - extra)
        y_edges = [cy + ch]
        for k in row_counts:
            y_edges.append(y_edges[-1] - k * ch / c)
        y_edges[-1] = cy
        out = []
        it = iter(members)
        for r, k in enumerate(row_counts):
            x_edges = [cx + j * cw / k for j in range(k)] + [cx + cw]
            for j in range(k):
                pid, fill = next(it)
                out.append(
                    _mark(
                        pid,
                        cell_index,
                        x_edges[j],
                        y_edges[r + 1],
                        x_edges[j + 1] - x_edges[j],
                        y_edges[r] - y_edges[r + 1],
                        fill,
                    )
                )
        return out

    if mode.effective == "streamgraph":
        short, long_ = min(cw, ch), max(cw, ch)
        aspect = long_ / short
        k = max(1, math.ceil(math.sqrt(c / aspect)))
        runs = math.ceil(c / k)
        s = _snap_down(min(short / k, long_ / runs))
        if cw >= ch:
            return _grid_block(cell, members, cell_index, s, runs, k, column_major=True)
        return _grid_block(cell, members, cell_index, s, k, runs, column_major=False)

    if mark_size is None:
        raise ConfigError("absolute mode requires a mark size")
    s = _snap_down(mark_size)
    max_cols = math.floor((cw + _FIT_EPS) / s)
    max_rows = math.floor((ch + _FIT_EPS) / s)
    ncols = max(1, min(c, math.ceil(math.sqrt(c * cw / ch)), max_cols))
    nrows = math.ceil(c / ncols)
    if nrows > max_rows:
        nrows = max_rows
        ncols = math.ceil(c / nrows)
        if ncols > max_cols:
            raise ConfigError("mark size too large for this cell's member count")
    return _grid_block(cell, members, cell_index, s, ncols, nrows, column_major=False)


def fold_segment(
    cfg: AxisConfig,
    labels: Sequence[str],
    label: str,
    state: FoldState,
) -> AxisConfig:
    """Return a config with one segment's fold state changed.

    Maximizing a segment minimizes all others; restoring a maximized
    segment to normal clears the folds it implied.
    """
    if label not in labels:
        raise ValueError(f"unknown segment label {label!r}")
    folds = dict(cfg.folds)
    if state == "maximized":
        folds = {name: "minimized" for name in labels if name != label}
        folds[label] = "maximized"
    elif state == "minimized":
        folds[label] = "minimized"
    else:
        was_max = folds.get(label) == "maximized"
        folds.pop(label, None)
        if was_max:
            folds = {}
    return replace(cfg, folds=folds)


# ---------------------------------------------------------------------------
# Whole-plot assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _AxisPlan:
    """Resolved per-axis state used while assembling a plot."""

    cfg: AxisConfig
    domain: SegmentedDomain | None  # None for value-positioned axes
    placed: AxisSegments
    gathers: bool
    # value -> pixel position for scatter/jitter axes
    position: object | None = None


def _numeric_value(dim: Dimension, v: Value) -> float | None:
    """Numeric stand-in for a value: quantitative as-is, nominal/ordinal by
    domain index."""
    if v is None:
        return None
    if dim.kind == "quantitative":
        return float(v)
    return float(dim.domain.index(v))


def _numeric_domain(dim: Dimension) -> tuple[float, float]:
    if dim.kind == "quantitative":
        return dim.domain
    return (0.0, float(max(len(dim.domain) - 1, 0)))


def _resolve_axis(dataset: Dataset, cfg: AxisConfig, extent: tuple[int, int]) -> _AxisPlan:
    if cfg.binding is None or cfg.transform == "gather":
        dim = None if cfg.binding is None else dataset.dimension(cfg.binding)
        domain = segment_domain(
            dataset,
            dim,
            bin_width=cfg.bin_width,
            bin_origin=cfg.bin_origin,
            order=cfg.segment_order,
        )
        placed = segment_axis(cfg, domain, extent)
        return _AxisPlan(cfg, domain, placed, True)
    dim = dataset.dimension(cfg.binding)
    n_present = sum(1 for v in dataset.column(cfg.binding) if v is not None)
    d_lo, d_hi = _numeric_domain(dim)
    seg = Segment(dim.name, Interval(d_lo, d_hi, True), n_present)
    placed = AxisSegments((PlacedSegment(seg, extent[0], extent[1], "normal"),))
    base = linear_transform((d_lo, d_hi), extent)
    if cfg.transform == "jitter":
        amp = cfg.jitter_amplitude if cfg.jitter_amplitude is not None else SCATTER_MARK
        seed = cfg.jitter_seed

        def position(v: float, pid: int, _base=base, _amp=amp, _seed=seed, _extent=extent) -> float:
            raw = _base(v) + jitter_offset(_seed, pid, _amp)
            return min(max(raw, _extent[0]), _extent[1])

    else:

        def position(v: float, pid: int, _base=base) -> float:
            return _base(v)

    return _AxisPlan(cfg, None, placed, False, position)


def _flip_axis(placed: AxisSegments, extent: tuple[int, int]) -> AxisSegments:
    """Mirror pixel intervals so the first segment sits at the bottom of a
    screen-space (y grows downward) axis."""
    lo, hi = extent
    flipped = tuple(
        PlacedSegment(p.segment, lo + hi - p.hi, lo + hi - p.lo, p.state) for p in placed
    )
    return AxisSegments(flipped)


def _color_plan(dataset: Dataset, color: str | None):
    """Return (sort_key, fill_token) functions for the color dimension."""
    if color is None:
        return (lambda p: 0.0), (lambda p: "none")
    dim = dataset.dimension(color)

    if dim.kind == "quantitative":
        d_lo, d_hi = dim.domain
        span = d_hi - d_lo

        def key(p, _lo=d_lo):
            v = p.values[color]
            return math.inf if v is None else float(v)

        def fill(p):
            v = p.values[color]
            if v is None:
                return "m"
            t = 0.5 if span == 0 else (float(v) - d_lo) / span
            return f"v{format_number(round(t, 6))}"

        return key, fill

    index = {v: i for i, v in enumerate(dim.domain)}

    def key(p):
        v = p.values[color]
        return math.inf if v is None else float(index[v])

    def fill(p):
        v = p.values[color]
        return "m" if v is None else f"c{index[v]}"

    return key, fill


def _representative_cell(x_placed: AxisSegments, y_placed: AxisSegments) -> tuple[float, float]:
    """Mean extent of the non-minimized segments on each axis; the cell
    whose aspect drives the absolute/streamgraph switch."""

    def mean_normal(placed: AxisSegments) -> float:
        widths = [p.width for p in placed if p.state != "minimized"]
        return sum(widths) / len(widths)

    return mean_normal(x_placed), mean_normal(y_placed)


def _stack_edges(lo: float, size: float, count: int) -> list[float]:
    """count+1 edges splitting [lo, lo+size] into equal shares."""
    edges = [lo + k * size / count for k in range(count)] + [lo + size]
    return edges


def _fold_or_mixed_cell(
    xseg: PlacedSegment,
    yseg: PlacedSegment,
    members: Sequence[tuple[int, str, float | None, float | None]],
    x_plan: _AxisPlan,
    y_plan: _AxisPlan,
    cell_index: tuple[int, int],
) -> list[MarkPlacement]:
    """Place members of a cell that cannot use grid packing.

    Per axis: a minimized segment spans its whole strip (the stacked result
    reads as a thin line of member colors in sort order); a scatter/jitter
    axis positions by value; the remaining gather axis carries an
    equal-share stack (against a strip) or a centered run of small marks
    (against a value axis).  Overlap is permitted on value axes.
    """
    n = len(members)
    cw, ch = xseg.width, yseg.width

    def axis_mode(seg: PlacedSegment, plan: _AxisPlan) -> str:
        if seg.state == "minimized":
            return "strip"
        return "grid" if plan.gathers else "value"

    mx, my = axis_mode(xseg, x_plan), axis_mode(yseg, y_plan)

    out = []
    if mx == "grid":
        x_edges = _stack_edges(xseg.lo, cw, n)
    if my == "grid":
        y_edges = _stack_edges(yseg.lo, ch, n)
    band_x = band_y = None
    if mx == "grid" and my == "value":
        g = min(cw / n, SCATTER_MARK)
        band_x = (xseg.lo + (cw - n * g) / 2, g)
    if my == "grid" and mx == "value":
        g = min(ch / n, SCATTER_MARK)
        band_y = (yseg.lo + (ch - n * g) / 2, g)

    for k, (pid, fill, xv, yv) in enumerate(members):
        if mx == "strip":
            x, w = xseg.lo, cw
        elif mx == "value":
            s = min(SCATTER_MARK, cw)
            x = min(max(x_plan.position(xv, pid) - s / 2, xseg.lo), xseg.hi - s)
            w = s
        elif band_x is not None:
            x = band_x[0] + k * band_x[1]
            w = band_x[1]
        else:
            x, w = x_edges[k], x_edges[k + 1] - x_edges[k]

        if my == "strip":
            y, h = yseg.lo, ch
        elif my == "value":
            s = min(SCATTER_MARK, ch)
            y = min(max(y_plan.position(yv, pid) - s / 2, yseg.lo), yseg.hi - s)
            h = s
        elif band_y is not None:
            # stack runs bottom-up in screen space
            y = band_y[0] + (n - 1 - k) * band_y[1]
            h = band_y[1]
        else:
            # equal-share stack, first member at the bottom
            y, h = y_edges[n - 1 - k], y_edges[n - k] - y_edges[n - 1 - k]
        out.append(_mark(pid, cell_index, x, y, w, h, fill))
    return out


def gatherplot(
    dataset: Dataset,
    x_cfg: AxisConfig,
    y_cfg: AxisConfig,
    color: str | None = None,
    mode_requested: Literal["absolute", "relative"] = "absolute",
    canvas: tuple[int, int] = (640, 480),
) -> Layout:
    """Compose a full gathered layout.

    Both axes are segmented; every point with values on all bound axis
    dimensions lands in exactly one cell; members sort by the color value
    (domain order for nominal, ascending for continuous), tie-broken by id;
    a single global mark size fits the densest cell; each cell packs via
    layout_cell; minimized folds and value axes use linear placement.
    """
    x_cfg.validate()
    y_cfg.validate()
    if not (x_cfg.gathers or y_cfg.gathers):
        raise NoGatherAxisError("neither axis gathers; use scatterplot() instead")
    width, height = canvas
    if width <= MARGIN_LEFT + MARGIN_RIGHT or height <= MARGIN_TOP + MARGIN_BOTTOM:
        raise ConfigError("canvas too small for plot margins")
    x_extent = (MARGIN_LEFT, width - MARGIN_RIGHT)
    y_extent = (MARGIN_TOP, height - MARGIN_BOTTOM)

    x_plan = _resolve_axis(dataset, x_cfg, x_extent)
    y_plan = _resolve_axis(dataset, y_cfg, y_extent)
    y_placed = _flip_axis(y_plan.placed, y_extent)
    y_plan = replace(y_plan, placed=y_placed)

    key_fn, fill_fn = _color_plan(dataset, color)

    def axis_index(plan: _AxisPlan, p) -> int | None:
        if plan.domain is not None:
            if plan.cfg.binding is None:
                return 0
            return plan.domain.index_of(p.values[plan.cfg.binding])
        return 0 if p.values[plan.cfg.binding] is not None else None

    cells: dict[tuple[int, int], list] = {}
    for p in dataset.points:
        xi = axis_index(x_plan, p)
        yi = axis_index(y_plan, p)
        if xi is None or yi is None:
            continue
        xv = None
        yv = None
        if not x_plan.gathers:
            xv = _numeric_value(dataset.dimension(x_cfg.binding), p.values[x_cfg.binding])
        if not y_plan.gathers:
            yv = _numeric_value(dataset.dimension(y_cfg.binding), p.values[y_cfg.binding])
        cells.setdefault((xi, yi), []).append((key_fn(p), p.id, fill_fn(p), xv, yv))
    for members in cells.values():
        members.sort(key=lambda m: (m[0], m[1]))

    rep_w, rep_h = _representative_cell(x_plan.placed, y_plan.placed)
    aspect = max(rep_w, rep_h) / min(rep_w, rep_h)
    mode = select_mode(mode_requested, aspect)

    mark_size: float | None = None
    if mode.effective != "relative" and x_plan.gathers and y_plan.gathers:
        fits = []
        for (xi, yi), members in cells.items():
            xseg = x_plan.placed.segments[xi]
            yseg = y_plan.placed.segments[yi]
            if xseg.state == "minimized" or yseg.state == "minimized":
                continue
            if xseg.width <= 0 or yseg.width <= 0:
                continue
            fits.append(absolute_mark_size((xseg.width, yseg.width), len(members)))
        if fits:
            mark_size = min(fits)

    marks: list[MarkPlacement] = []
    for (xi, yi) in sorted(cells):
        members = cells[(xi, yi)]
        xseg = x_plan.placed.segments[xi]
        yseg = y_plan.placed.segments[yi]
        simple = [(pid, fill) for (_k, pid, fill, _xv, _yv) in members]
        folded = xseg.state == "minimized" or yseg.state == "minimized"
        mixed = not (x_plan.gathers and y_plan.gathers)
        if folded or mixed:
            full = [(pid, fill, xv, yv) for (_k, pid, fill, xv, yv) in members]
            marks.extend(_fold_or_mixed_cell(xseg, yseg, full, x_plan, y_plan, (xi, yi)))
        else:
            rect = (xseg.lo, yseg.lo, xseg.width, yseg.width)
            marks.extend(layout_cell(rect, simple, mode, mark_size, (xi, yi)))

    marks.sort(key=lambda m: m.point_id)
    return Layout(tuple(marks), x_plan.placed, y_plan.placed, mode, (width, height))


def scatterplot(
    dataset: Dataset,
    x_cfg: AxisConfig,
    y_cfg: AxisConfig,
    color: str | None = None,
    mode_requested: Literal["absolute", "relative"] = "absolute",
    canvas: tuple[int, int] = (640, 480),
) -> Layout:
    """Plain scatter/jitter layout: marks at value positions on both axes,
    one full-extent segment per axis.  Overlap is inherent here."""
    x_cfg.validate()
    y_cfg.validate()
    if x_cfg.gathers or y_cfg.gathers:
        raise ConfigError("an axis gathers; use gatherplot() instead")
    width, height = canvas
    if width <= MARGIN_LEFT + MARGIN_RIGHT or height <= MARGIN_TOP + MARGIN_BOTTOM:
        raise ConfigError("canvas too small for plot margins")
    x_extent = (MARGIN_LEFT, width - MARGIN_RIGHT)
    y_extent = (MARGIN_TOP, height - MARGIN_BOTTOM)
    x_plan = _resolve_axis(dataset, x_cfg, x_extent)
    y_plan = _resolve_axis(dataset, y_cfg, y_extent)

    _, fill_fn = _color_plan(dataset, color)
    x_dim = dataset.dimension(x_cfg.binding)
    y_dim = dataset.dimension(y_cfg.binding)

    marks = []
    s = SCATTER_MARK
    for p in dataset.points:
        xv = _numeric_value(x_dim, p.values[x_cfg.binding])
        yv = _numeric_value(y_dim, p.values[y_cfg.binding])
        if xv is None or yv is None:
            continue
        fx = x_plan.position(xv, p.id)
        # flip y so larger values sit higher on screen
        fy_axis = y_plan.position(yv, p.id)
        fy = y_extent[0] + y_extent[1] - fy_axis
        x = min(max(fx - s / 2, x_extent[0]), x_extent[1] - s)
        y = min(max(fy - s / 2, y_extent[0]), y_extent[1] - s)
        marks.append(_mark(p.id, (0, 0), x, y, s, s, fill_fn(p)))
    marks.sort(key=lambda m: m.point_id)
    mode = LayoutMode(mode_requested, mode_requested, False)
    return Layout(tuple(marks), x_plan.placed, y_plan.placed, mode, (width, height))


def gatherplot_matrix(
    dataset: Dataset,
    dims: Sequence[str],
    cell_size: tuple[int, int] = (220, 220),
    mode_requested: Literal["absolute", "relative"] = "absolute",
) -> list[list[Layout]]:
    """(n+1) x (n+1) grid of gatherplots; row/column 0 uses the undefined
    axis, so single-dimension distributions and the all-points group appear
    alongside the pairwise panels."""
    for name in dims:
        dataset.dimension(name)
    n = len(dims) + 1
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            x_cfg = AxisConfig(binding=dims[j - 1] if j >= 1 else None)
            y_cfg = AxisConfig(binding=dims[i - 1] if i >= 1 else None)
            row.append(gatherplot(dataset, x_cfg, y_cfg, None, mode_requested, cell_size))
        grid.append(row)
    return grid
