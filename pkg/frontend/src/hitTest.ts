// Hit testing in canvas-local pixel coordinates.
//
// Marks win over everything and are tested topmost-first (marks render in
// document order, so the last hit in the array is on top). Axis brackets
// occupy the bands between the plot area and the canvas edge: below the
// plot for the X axis, left of it for the Y axis.

import type { LayoutDoc } from "./types.js";
import { plotSpanX, plotSpanY } from "./types.js";

export type HitResult =
  | { kind: "mark"; id: number }
  | { kind: "segment"; axis: "x" | "y"; label: string }
  | null;

export function hitTest(doc: LayoutDoc, px: number, py: number): HitResult {
  for (let i = doc.marks.length - 1; i >= 0; i--) {
    const m = doc.marks[i]!;
    if (px >= m.x && px <= m.x + m.w && py >= m.y && py <= m.y + m.h) {
      return { kind: "mark", id: m.id };
    }
  }
  const [plotLeft] = plotSpanX(doc);
  const [, plotBottom] = plotSpanY(doc);
  if (py >= plotBottom && py <= doc.canvas.height) {
    for (const seg of doc.x_axis) {
      if (px >= seg.lo && px < seg.hi) return { kind: "segment", axis: "x", label: seg.label };
    }
  }
  if (px >= 0 && px <= plotLeft) {
    for (const seg of doc.y_axis) {
      if (py >= seg.lo && py < seg.hi) return { kind: "segment", axis: "y", label: seg.label };
    }
  }
  return null;
}

/** Number of marks whose center falls inside a segment's interval. */
export function segmentCount(doc: LayoutDoc, axis: "x" | "y", label: string): number {
  const segs = axis === "x" ? doc.x_axis : doc.y_axis;
  const seg = segs.find((s) => s.label === label);
  if (!seg) return 0;
  let count = 0;
  for (const m of doc.marks) {
    const center = axis === "x" ? m.x + m.w / 2 : m.y + m.h / 2;
    if (center >= seg.lo && center < seg.hi) count++;
  }
  return count;
}
