"""Tabular data model: datasets, dimension kinds, and segmented domains.

A Dataset is an immutable table of points with stable integer ids.  Each
column (Dimension) is classified as nominal, ordinal, or quantitative, and
can be turned into a SegmentedDomain: an ordered partition of the observed
values that the layout engine maps onto contiguous runs of a graphical
axis.  Quantitative columns are quantized into equal-width bins first.
"""

from __future__ import annotations

import csv
import io
import math
import re
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterable, Literal, Mapping, Sequence

from .errors import EmptyInputError, SchemaError

Value = str | float | None
DimensionKind = Literal["nominal", "ordinal", "quantitative"]

# Integer-valued columns with at most this many distinct values are treated
# as ordinal rather than quantitative.
ORDINAL_MAX_DISTINCT = 12

# Number of bins aimed for when no bin width is given.
DEFAULT_BIN_TARGET = 8

# Hard cap on the number of quantization bins a caller may request.
MAX_BINS = 10_000

_NUMERIC_RE = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")


def parse_field(text: str) -> Value:
    """Parse one raw CSV field: empty -> missing, numeric-looking -> float."""
    if text == "":
        return None
    if _NUMERIC_RE.match(text):
        return float(text)
    return text


def format_number(x: float) -> str:
    """Shortest decimal that round-trips; integral values drop the point."""
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def fmt_value(v: Value) -> str:
    """Human label for a raw value."""
    if v is None:
        return ""
    if isinstance(v, float):
        return format_number(v)
    return v


@dataclass(frozen=True)
class DataPoint:
    """One table row: a stable id plus a value per dimension name."""

    id: int
    values: Mapping[str, Value]


@dataclass(frozen=True)
class Dimension:
    """A column with its inferred kind and value domain.

    domain is the ordered tuple of distinct values for nominal (first
    appearance order) and ordinal (ascending) columns, and the (min, max)
    pair for quantitative columns.
    """

    name: str
    kind: DimensionKind
    domain: tuple


@dataclass(frozen=True)
class Interval:
    """Half-open numeric interval [lo, hi); optionally closed at hi so the
    last quantization bin can include the observed maximum."""

    lo: float
    hi: float
    closed_hi: bool = False

    def contains(self, v: float) -> bool:
        if self.lo <= v < self.hi:
            return True
        return self.closed_hi and v == self.hi


@dataclass(frozen=True)
class Segment:
    """One slot of a segmented axis: an exact value or an interval."""

    label: str
    membership: Value | Interval
    count: int

    def contains(self, v: Value) -> bool:
        if isinstance(self.membership, Interval):
            return isinstance(v, float) and self.membership.contains(v)
        return v == self.membership


@dataclass(frozen=True)
class SegmentedDomain:
    """Ordered segments covering every non-missing value of a dimension.

    ``dimension`` is None for the "undefined" domain that gathers every
    point into a single segment.  ``quantizer`` records (bin_width, origin)
    when the segments came from quantization.
    """

    dimension: Dimension | None
    segments: tuple[Segment, ...]
    quantizer: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        exact: dict[Value, int] = {}
        bounds: list[float] = []
        for i, seg in enumerate(self.segments):
            if isinstance(seg.membership, Interval):
                if not bounds:
                    bounds.append(seg.membership.lo)
                bounds.append(seg.membership.hi)
            else:
                exact[seg.membership] = i
        object.__setattr__(self, "_exact_index", exact)
        object.__setattr__(self, "_bounds", bounds)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(seg.label for seg in self.segments)

    def index_of(self, v: Value) -> int | None:
        """Segment index containing ``v``, or None when outside the domain."""
        if self.dimension is None:
            return 0
        if v is None:
            return None
        bounds: list[float] = self._bounds  # type: ignore[attr-defined]
        if bounds:
            if not isinstance(v, float):
                return None
            if v < bounds[0] or v > bounds[-1]:
                return None
            idx = bisect_right(bounds, v) - 1
            return min(idx, len(self.segments) - 1)
        return self._exact_index.get(v)  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Dataset:
    """Immutable table with stable point ids and per-dimension metadata."""

    points: tuple[DataPoint, ...]
    dimensions: tuple[Dimension, ...]
    missing_counts: Mapping[str, int]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(d.name for d in self.dimensions)

    def dimension(self, name: str) -> Dimension:
        for d in self.dimensions:
            if d.name == name:
                return d
        raise KeyError(f"unknown dimension {name!r}")

    def column(self, name: str) -> list[Value]:
        self.dimension(name)
        return [p.values[name] for p in self.points]


def infer_kind(column: Sequence[Value]) -> DimensionKind:
    """Classify a column; missing values are ignored.

    Non-numeric values force nominal.  All-numeric columns stay ordinal
    while every value is integral and there are at most
    ORDINAL_MAX_DISTINCT distinct ones; otherwise they are quantitative.
    An all-missing column degrades to nominal with an empty domain.
    """
    present = [v for v in column if v is not None]
    if not present:
        return "nominal"
    if any(isinstance(v, str) for v in present):
        return "nominal"
    distinct = {v for v in present}
    if all(float(v).is_integer() for v in distinct) and len(distinct) <= ORDINAL_MAX_DISTINCT:
        return "ordinal"
    return "quantitative"


def _build_dimension(name: str, column: Sequence[Value]) -> Dimension:
    kind = infer_kind(column)
    present = [v for v in column if v is not None]
    if kind == "nominal":
        seen: dict[Value, None] = {}
        for v in present:
            seen.setdefault(v, None)
        return Dimension(name, kind, tuple(seen))
    if kind == "ordinal":
        return Dimension(name, kind, tuple(sorted({float(v) for v in present})))
    values = [float(v) for v in present]
    return Dimension(name, kind, (min(values), max(values)))


def ingest_table(rows: Sequence[Mapping[str, str]]) -> Dataset:
    """Build a Dataset from labeled text records.

    Ids are assigned 0..n-1 in row order.  Every row must carry the same
    label set; empty fields become missing.
    """
    if not rows:
        raise EmptyInputError("no data rows")
    labels = list(rows[0].keys())
    label_set = set(labels)
    points = []
    for i, row in enumerate(rows):
        if set(row.keys()) != label_set:
            raise SchemaError(
                f"row {i} labels {sorted(row.keys())} do not match header {sorted(label_set)}"
            )
        points.append(DataPoint(i, {k: parse_field(row[k]) for k in labels}))
    dims = []
    missing: dict[str, int] = {}
    for name in labels:
        column = [p.values[name] for p in points]
        dims.append(_build_dimension(name, column))
        missing[name] = sum(1 for v in column if v is None)
    return Dataset(tuple(points), tuple(dims), missing)


def ingest_csv(text: str) -> Dataset:
    """Parse RFC-4180-style CSV text (first row = header) into a Dataset."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise EmptyInputError("empty input") from None
    if len(set(header)) != len(header):
        raise SchemaError(f"duplicate column names in header {header}")
    rows = []
    for lineno, raw in enumerate(reader, start=2):
        if not raw:
            continue
        if len(raw) != len(header):
            raise SchemaError(
                f"line {lineno}: expected {len(header)} fields, got {len(raw)}"
            )
        rows.append(dict(zip(header, raw)))
    return ingest_table(rows)


def _round_one_significant(x: float) -> float:
    if x == 0:
        return 0.0
    exp = math.floor(math.log10(abs(x)))
    return round(x, -exp)


def default_bin_width(dimension: Dimension) -> float:
    """Bin width aiming for ~DEFAULT_BIN_TARGET bins, rounded to one
    significant digit so bin labels stay short."""
    lo, hi = dimension.domain
    span = hi - lo
    if span == 0:
        return 1.0
    return _round_one_significant(span / DEFAULT_BIN_TARGET)


def quantize(
    dataset: Dataset,
    dimension: Dimension,
    bin_width: float | None = None,
    origin: float | None = None,
) -> SegmentedDomain:
    """Partition a quantitative dimension into equal-width half-open bins.

    Bins are [origin + k*w, origin + (k+1)*w) covering observed min..max;
    the last bin is closed above so a maximum landing exactly on a boundary
    does not spawn an extra bin.  Labels read "center±half".
    """
    if dimension.kind != "quantitative":
        raise ValueError(f"dimension {dimension.name!r} is {dimension.kind}, not quantitative")
    if bin_width is None:
        bin_width = default_bin_width(dimension)
    if bin_width <= 0:
        raise ValueError(f"bin width must be positive, got {bin_width}")
    lo, hi = dimension.domain
    if origin is None:
        origin = math.floor(lo / bin_width) * bin_width
    k_lo = math.floor((lo - origin) / bin_width)
    # float division can round across a boundary; repair until covered
    while origin + k_lo * bin_width > lo:
        k_lo -= 1
    k_hi = max(k_lo, math.ceil((hi - origin) / bin_width) - 1)
    while origin + (k_hi + 1) * bin_width < hi:
        k_hi += 1
    if k_hi - k_lo + 1 > MAX_BINS:
        raise ValueError(
            f"bin width {bin_width} would create {k_hi - k_lo + 1} bins (limit {MAX_BINS})"
        )
    half = bin_width / 2
    values = [v for v in dataset.column(dimension.name) if v is not None]
    bounds = [origin + k * bin_width for k in range(k_lo, k_hi + 2)]
    counts = [0] * (k_hi - k_lo + 1)
    for v in values:
        idx = min(bisect_right(bounds, v) - 1, len(counts) - 1)
        counts[idx] += 1
    segments = []
    for j, k in enumerate(range(k_lo, k_hi + 1)):
        center = origin + k * bin_width + half
        label = f"{format_number(round(center, 10))}±{format_number(round(half, 10))}"
        segments.append(
            Segment(label, Interval(bounds[j], bounds[j + 1], closed_hi=(k == k_hi)), counts[j])
        )
    return SegmentedDomain(dimension, tuple(segments), (bin_width, origin))


def segment_domain(
    dataset: Dataset,
    dimension: Dimension | None,
    *,
    bin_width: float | None = None,
    bin_origin: float | None = None,
    order: Sequence[Value] | None = None,
) -> SegmentedDomain:
    """Segment any dimension; None yields the singleton all-points domain.

    ``order`` overrides segment order for nominal dimensions only (ordinal
    and quantized orders follow the data relation).
    """
    if dimension is None:
        seg = Segment("all", Interval(-math.inf, math.inf, True), len(dataset.points))
        return SegmentedDomain(None, (seg,))
    if dimension.kind == "quantitative":
        return quantize(dataset, dimension, bin_width, bin_origin)
    domain = list(dimension.domain)
    if order is not None:
        if dimension.kind != "nominal":
            raise ValueError("segment order can only be overridden for nominal dimensions")
        if sorted(map(fmt_value, order)) != sorted(map(fmt_value, domain)):
            raise ValueError("segment order must be a permutation of the domain")
        domain = list(order)
    column = dataset.column(dimension.name)
    counts = {v: 0 for v in domain}
    for v in column:
        if v is not None:
            counts[v] += 1
    segments = tuple(Segment(fmt_value(v), v, counts[v]) for v in domain)
    return SegmentedDomain(dimension, segments)


def count_descending_order(domain: SegmentedDomain) -> tuple[Value, ...]:
    """Domain values reordered by member count, largest first (stable).

    Usable as an AxisConfig segment_order for nominal dimensions.
    """
    order = sorted(range(len(domain.segments)), key=lambda i: (-domain.segments[i].count, i))
    return tuple(domain.segments[i].membership for i in order)
