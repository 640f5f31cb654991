"""Layout serialization: the flat JSON contract shared by the renderer, the
HTTP service, and the explorer client.

Canonical form sorts object keys, drops insignificant whitespace, and
writes floats as their shortest round-trip decimals, so equal layouts
serialize to byte-equal documents.
"""

from __future__ import annotations

import json

from .layout import Layout


def layout_to_doc(layout: Layout) -> dict:
    return {
        "canvas": {"width": layout.canvas[0], "height": layout.canvas[1]},
        "mode": {
            "requested": layout.mode.requested,
            "effective": layout.mode.effective,
            "auto_switched": layout.mode.auto_switched,
        },
        "x_axis": [
            {"label": s.segment.label, "lo": s.lo, "hi": s.hi, "state": s.state}
            for s in layout.x_axis
        ],
        "y_axis": [
            {"label": s.segment.label, "lo": s.lo, "hi": s.hi, "state": s.state}
            for s in layout.y_axis
        ],
        "marks": [
            {
                "id": m.point_id,
                "x": m.x,
                "y": m.y,
                "w": m.w,
                "h": m.h,
                "r": m.corner_radius,
                "fill": m.fill,
            }
            for m in layout.marks
        ],
    }


def canonical_json(doc: object) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


def layout_json(layout: Layout) -> str:
    return canonical_json(layout_to_doc(layout))
