// Client-side tweening between two layout documents.
//
// Semantics mirror the server's transition interpolation: marks pair by
// point id, axes pair by index when the segment counts match (cutting
// over at the eased midpoint otherwise), continuous fill tokens
// interpolate, categorical fills switch at the midpoint. The endpoints
// are returned by reference, so when an animation settles the on-screen
// geometry IS the server layout, not a reconstruction of it.

import type { LayoutDoc, MarkDoc, SegmentDoc } from "./types.js";

export type Easing = "linear" | "cubic-in-out";

export function applyEasing(t: number, easing: Easing): number {
  if (easing === "linear") return t;
  return t < 0.5 ? 4 * t * t * t : 1 - Math.pow(-2 * t + 2, 3) / 2;
}

function lerp(a: number, b: number, e: number): number {
  return a + (b - a) * e;
}

function lerpFill(a: string, b: string, e: number): string {
  if (a.startsWith("v") && b.startsWith("v")) {
    const t = lerp(parseFloat(a.slice(1)), parseFloat(b.slice(1)), e);
    return `v${Math.round(t * 1e6) / 1e6}`;
  }
  return e < 0.5 ? a : b;
}

function lerpAxis(a: SegmentDoc[], b: SegmentDoc[], e: number): SegmentDoc[] {
  if (a.length !== b.length) return e < 0.5 ? a : b;
  return a.map((sa, i) => {
    const sb = b[i]!;
    const keep = e < 0.5 ? sa : sb;
    return { label: keep.label, lo: lerp(sa.lo, sb.lo, e), hi: lerp(sa.hi, sb.hi, e), state: keep.state };
  });
}

export function interpolateLayout(
  from: LayoutDoc,
  to: LayoutDoc,
  t: number,
  easing: Easing = "cubic-in-out",
): LayoutDoc {
  if (t <= 0) return from;
  if (t >= 1) return to;
  const e = applyEasing(t, easing);
  const fromMarks = new Map<number, MarkDoc>(from.marks.map((m) => [m.id, m]));
  const marks: MarkDoc[] = to.marks.map((mb) => {
    const ma = fromMarks.get(mb.id);
    if (ma === undefined) return mb; // defensive: unmatched marks jump
    return {
      id: mb.id,
      x: lerp(ma.x, mb.x, e),
      y: lerp(ma.y, mb.y, e),
      w: lerp(ma.w, mb.w, e),
      h: lerp(ma.h, mb.h, e),
      r: lerp(ma.r, mb.r, e),
      fill: lerpFill(ma.fill, mb.fill, e),
    };
  });
  const mode = e < 0.5 ? from.mode : to.mode;
  return {
    canvas: {
      width: lerp(from.canvas.width, to.canvas.width, e),
      height: lerp(from.canvas.height, to.canvas.height, e),
    },
    mode: { ...mode },
    x_axis: lerpAxis(from.x_axis, to.x_axis, e),
    y_axis: lerpAxis(from.y_axis, to.y_axis, e),
    marks,
  };
}

export function sameIdSet(a: LayoutDoc, b: LayoutDoc): boolean {
  if (a.marks.length !== b.marks.length) return false;
  const ids = new Set(a.marks.map((m) => m.id));
  return b.marks.every((m) => ids.has(m.id));
}
