"""Animated transitions between two layouts over the same dataset.

Every intermediate frame preserves the point-id bijection (object
constancy); the t=0 and t=1 frames are the endpoint layouts themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import IdentityMismatchError
from .layout import AxisSegments, Layout, LayoutMode, MarkPlacement, PlacedSegment
from .data import format_number

Easing = Literal["linear", "cubic-in-out"]


def apply_easing(t: float, easing: Easing) -> float:
    if easing == "linear":
        return t
    if t < 0.5:
        return 4 * t * t * t
    return 1 - (-2 * t + 2) ** 3 / 2


@dataclass(frozen=True)
class TransitionPlan:
    start: Layout
    end: Layout
    duration_ms: float = 800.0
    easing: Easing = "cubic-in-out"

    def __post_init__(self) -> None:
        if self.start.point_ids != self.end.point_ids:
            raise IdentityMismatchError(
                "transition endpoints must cover the same point ids"
            )


def _lerp(a: float, b: float, e: float) -> float:
    return a + (b - a) * e


def _lerp_fill(a: str, b: str, e: float) -> str:
    if a.startswith("v") and b.startswith("v"):
        t = _lerp(float(a[1:]), float(b[1:]), e)
        return f"v{format_number(round(t, 6))}"
    # categorical identity has no meaningful intermediate hue
    return a if e < 0.5 else b


def _lerp_axis(a: AxisSegments, b: AxisSegments, e: float) -> AxisSegments:
    if len(a) != len(b):
        # structurally different axes cannot pair up; cut over at midpoint
        return a if e < 0.5 else b
    segs = []
    for sa, sb in zip(a, b):
        keep = sa if e < 0.5 else sb
        segs.append(
            PlacedSegment(keep.segment, _lerp(sa.lo, sb.lo, e), _lerp(sa.hi, sb.hi, e), keep.state)
        )
    return AxisSegments(tuple(segs))


def interpolate(plan: TransitionPlan, t: float) -> Layout:
    """Layout at fraction t of the transition; endpoints are exact."""
    if not 0 <= t <= 1:
        raise ValueError("t must lie in [0, 1]")
    if t == 0:
        return plan.start
    if t == 1:
        return plan.end
    e = apply_easing(t, plan.easing)
    start_marks = {m.point_id: m for m in plan.start.marks}
    marks = []
    for mb in plan.end.marks:
        ma = start_marks[mb.point_id]
        marks.append(
            MarkPlacement(
                mb.point_id,
                ma.cell if e < 0.5 else mb.cell,
                _lerp(ma.x, mb.x, e),
                _lerp(ma.y, mb.y, e),
                _lerp(ma.w, mb.w, e),
                _lerp(ma.h, mb.h, e),
                _lerp(ma.corner_radius, mb.corner_radius, e),
                _lerp_fill(ma.fill, mb.fill, e),
            )
        )
    marks.sort(key=lambda m: m.point_id)
    a, b = plan.start, plan.end
    mode = a.mode if e < 0.5 else b.mode
    canvas = (
        _lerp(a.canvas[0], b.canvas[0], e),
        _lerp(a.canvas[1], b.canvas[1], e),
    )
    if a.canvas == b.canvas:
        canvas = a.canvas
    return Layout(
        tuple(marks),
        _lerp_axis(a.x_axis, b.x_axis, e),
        _lerp_axis(a.y_axis, b.y_axis, e),
        LayoutMode(mode.requested, mode.effective, mode.auto_switched),
        canvas,
    )


def keyframes(plan: TransitionPlan, fps: float) -> list[Layout]:
    """Evenly spaced frames: ceil(duration * fps / 1000) + 1 of them, the
    first equal to the start layout and the last to the end layout."""
    if fps <= 0:
        raise ValueError("fps must be positive")
    if plan.duration_ms <= 0:
        raise ValueError("duration must be positive")
    n = math.ceil(plan.duration_ms * fps / 1000) + 1
    return [interpolate(plan, i / (n - 1)) for i in range(n)]
