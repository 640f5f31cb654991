"""Gatherplot: overplotting-free scatterplot generalization.

The gather transform segments a graphical axis by value and packs marks
into stacked groups per cell, so every data point stays visible as its own
rounded rectangle.  This package provides the data model, the layout
engine, an SVG renderer, animated transitions, a CLI, and an HTTP layout
service.
"""

__version__ = "0.1.0"

from .data import (
    Dataset,
    DataPoint,
    Dimension,
    Interval,
    Segment,
    SegmentedDomain,
    count_descending_order,
    infer_kind,
    ingest_csv,
    ingest_table,
    quantize,
    segment_domain,
)
from .layout import (
    AxisConfig,
    AxisSegments,
    Layout,
    LayoutMode,
    MarkPlacement,
    PlacedSegment,
    absolute_mark_size,
    fold_segment,
    gatherplot,
    gatherplot_matrix,
    layout_cell,
    scatterplot,
    segment_axis,
    select_mode,
)
from .scales import (
    VisualTransformation,
    jitter_positions,
    linear_positions,
    overlap_index,
    overplotting_index,
)
from .serialize import canonical_json, layout_json, layout_to_doc
from .svg import Theme, render_matrix_svg, render_svg
from .transitions import TransitionPlan, interpolate, keyframes

__all__ = [
    "AxisConfig",
    "AxisSegments",
    "DataPoint",
    "Dataset",
    "Dimension",
    "Interval",
    "Layout",
    "LayoutMode",
    "MarkPlacement",
    "PlacedSegment",
    "Segment",
    "SegmentedDomain",
    "Theme",
    "TransitionPlan",
    "VisualTransformation",
    "absolute_mark_size",
    "canonical_json",
    "count_descending_order",
    "fold_segment",
    "gatherplot",
    "gatherplot_matrix",
    "infer_kind",
    "ingest_csv",
    "ingest_table",
    "interpolate",
    "jitter_positions",
    "keyframes",
    "layout_cell",
    "layout_json",
    "layout_to_doc",
    "linear_positions",
    "overlap_index",
    "overplotting_index",
    "quantize",
    "render_matrix_svg",
    "render_svg",
    "scatterplot",
    "segment_axis",
    "segment_domain",
    "select_mode",
]
