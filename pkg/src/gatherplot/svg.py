"""Deterministic SVG rendering for layouts.

Marks become rounded rectangles carrying their point id; each axis segment
gets a bracket spanning its pixel interval plus one label (the value for
nominal segments, "center±half" for quantized ones).  Rendering the same
layout twice yields byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .data import format_number
from .layout import AxisSegments, Layout

# Bracket ends are inset this much from segment boundaries; the drawn span
# stays within half a pixel of the segment interval while adjacent brackets
# keep a visible gap.
BRACKET_INSET = 0.5
BRACKET_TICK = 4
AXIS_PAD = 3

TABLEAU10 = (
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
    "#9c755f",
    "#bab0ac",
)


@dataclass(frozen=True)
class Theme:
    palette: tuple[str, ...] = TABLEAU10
    ramp: tuple[str, str] = ("#d4e5f4", "#08306b")
    missing_color: str = "#b0b0b0"
    default_color: str = "#4e79a7"
    font_size: int = 11
    bracket_stroke: float = 1.0
    axis_color: str = "#444444"

    def __post_init__(self) -> None:
        if not self.palette:
            raise ValueError("palette must not be empty")
        if self.ramp[0] == self.ramp[1]:
            raise ValueError("ramp endpoints must differ")


def _hex_to_rgb(color: str) -> tuple[int, int, int]:
    c = color.lstrip("#")
    return int(c[0:2], 16), int(c[2:4], 16), int(c[4:6], 16)


def _mix(a: str, b: str, t: float) -> str:
    ra, ga, ba = _hex_to_rgb(a)
    rb, gb, bb = _hex_to_rgb(b)
    t = min(max(t, 0.0), 1.0)
    return "#{:02x}{:02x}{:02x}".format(
        round(ra + (rb - ra) * t), round(ga + (gb - ga) * t), round(ba + (bb - ba) * t)
    )


def resolve_fill(token: str, theme: Theme) -> str:
    """Map a mark fill token to a concrete color."""
    if token == "none":
        return theme.default_color
    if token == "m":
        return theme.missing_color
    if token.startswith("c"):
        return theme.palette[int(token[1:]) % len(theme.palette)]
    if token.startswith("v"):
        return _mix(theme.ramp[0], theme.ramp[1], float(token[1:]))
    return theme.default_color


def _fmt(x: float) -> str:
    return format_number(round(x, 6))


def _mark_elements(layout: Layout, theme: Theme) -> list[str]:
    out = []
    for m in layout.marks:
        out.append(
            f'<rect id="mark-{m.point_id}" x="{_fmt(m.x)}" y="{_fmt(m.y)}" '
            f'width="{_fmt(m.w)}" height="{_fmt(m.h)}" rx="{_fmt(m.corner_radius)}" '
            f'fill="{resolve_fill(m.fill, theme)}"/>'
        )
    return out


def _x_axis_elements(layout: Layout, theme: Theme) -> list[str]:
    _, plot_bottom = _plot_span(layout.y_axis)
    base = plot_bottom + AXIS_PAD
    out = []
    for seg in layout.x_axis:
        lo, hi = seg.lo + BRACKET_INSET, seg.hi - BRACKET_INSET
        if hi <= lo:
            continue
        out.append(
            f'<path class="bracket" d="M {_fmt(lo)} {_fmt(base)} V {_fmt(base + BRACKET_TICK)} '
            f'H {_fmt(hi)} V {_fmt(base)}" fill="none" stroke="{theme.axis_color}" '
            f'stroke-width="{_fmt(theme.bracket_stroke)}"/>'
        )
        cx = (seg.lo + seg.hi) / 2
        ty = base + BRACKET_TICK + theme.font_size
        out.append(
            f'<text class="seg-label" x="{_fmt(cx)}" y="{_fmt(ty)}" text-anchor="middle" '
            f'font-size="{theme.font_size}">{escape(seg.segment.label)}</text>'
        )
    return out


def _y_axis_elements(layout: Layout, theme: Theme) -> list[str]:
    plot_left, _ = _plot_span(layout.x_axis)
    base = plot_left - AXIS_PAD
    out = []
    for seg in layout.y_axis:
        lo, hi = seg.lo + BRACKET_INSET, seg.hi - BRACKET_INSET
        if hi <= lo:
            continue
        out.append(
            f'<path class="bracket" d="M {_fmt(base)} {_fmt(lo)} H {_fmt(base - BRACKET_TICK)} '
            f'V {_fmt(hi)} H {_fmt(base)}" fill="none" stroke="{theme.axis_color}" '
            f'stroke-width="{_fmt(theme.bracket_stroke)}"/>'
        )
        cy = (seg.lo + seg.hi) / 2 + theme.font_size * 0.35
        tx = base - BRACKET_TICK - 4
        out.append(
            f'<text class="seg-label" x="{_fmt(tx)}" y="{_fmt(cy)}" text-anchor="end" '
            f'font-size="{theme.font_size}">{escape(seg.segment.label)}</text>'
        )
    return out


def _plot_span(axis: AxisSegments) -> tuple[float, float]:
    return axis.extent


def _svg_body(layout: Layout, theme: Theme) -> list[str]:
    body = ['<g class="x-axis">']
    body.extend(_x_axis_elements(layout, theme))
    body.append("</g>")
    body.append('<g class="y-axis">')
    body.extend(_y_axis_elements(layout, theme))
    body.append("</g>")
    body.append('<g class="marks">')
    body.extend(_mark_elements(layout, theme))
    body.append("</g>")
    return body


def render_svg(layout: Layout, theme: Theme = Theme()) -> str:
    w, h = layout.canvas
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" height="{_fmt(h)}" '
        f'viewBox="0 0 {_fmt(w)} {_fmt(h)}" font-family="sans-serif">'
    ]
    lines.extend(_svg_body(layout, theme))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_matrix_svg(
    grid: list[list[Layout]],
    theme: Theme = Theme(),
    dim_names: list[str] | None = None,
) -> str:
    """Compose a rectangular grid of layouts into one page with shared
    dimension labels on the top and left margins."""
    if not grid or not grid[0]:
        raise ValueError("matrix grid must be non-empty")
    cols = len(grid[0])
    if any(len(row) != cols for row in grid):
        raise ValueError("matrix grid must be rectangular")
    pw, ph = grid[0][0].canvas
    for row in grid:
        for panel in row:
            if panel.canvas != (pw, ph):
                raise ValueError("matrix panels must share one canvas size")

    gap = 8
    band = 20
    names = dim_names or []

    def header(k: int) -> str:
        if k == 0:
            return "(all)"
        return names[k - 1] if k - 1 < len(names) else ""

    total_w = band + cols * (pw + gap)
    total_h = band + len(grid) * (ph + gap)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" '
        f'viewBox="0 0 {total_w} {total_h}" font-family="sans-serif">'
    ]
    for j in range(cols):
        cx = band + j * (pw + gap) + pw / 2
        lines.append(
            f'<text class="matrix-col" x="{_fmt(cx)}" y="{band - 6}" text-anchor="middle" '
            f'font-size="{theme.font_size + 1}">{escape(header(j))}</text>'
        )
    for i in range(len(grid)):
        cy = band + i * (ph + gap) + ph / 2
        lines.append(
            f'<text class="matrix-row" x="12" y="{_fmt(cy)}" text-anchor="middle" '
            f'font-size="{theme.font_size + 1}" transform="rotate(-90 12 {_fmt(cy)})">'
            f"{escape(header(i))}</text>"
        )
    for i, row in enumerate(grid):
        for j, panel in enumerate(row):
            px = band + j * (pw + gap)
            py = band + i * (ph + gap)
            lines.append(f'<g class="panel" transform="translate({px} {py})">')
            lines.extend(_svg_body(panel, theme))
            lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
