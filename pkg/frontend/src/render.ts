// SVG DOM view of a layout document. Geometry attributes come straight
// from the document's numbers; nothing is recomputed client-side.

import { resolveFill } from "./colors.js";
import type { LayoutDoc, SegmentDoc } from "./types.js";
import { plotSpanX, plotSpanY } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const BRACKET_INSET = 0.5;
const BRACKET_TICK = 4;
const AXIS_PAD = 3;

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function bracketPathX(seg: SegmentDoc, base: number): string {
  const lo = seg.lo + BRACKET_INSET;
  const hi = seg.hi - BRACKET_INSET;
  return `M ${lo} ${base} V ${base + BRACKET_TICK} H ${hi} V ${base}`;
}

function bracketPathY(seg: SegmentDoc, base: number): string {
  const lo = seg.lo + BRACKET_INSET;
  const hi = seg.hi - BRACKET_INSET;
  return `M ${base} ${lo} H ${base - BRACKET_TICK} V ${hi} H ${base}`;
}

export function renderLayout(svg: SVGSVGElement, doc: LayoutDoc): void {
  svg.setAttribute("width", String(doc.canvas.width));
  svg.setAttribute("height", String(doc.canvas.height));
  svg.setAttribute("viewBox", `0 0 ${doc.canvas.width} ${doc.canvas.height}`);
  while (svg.firstChild) svg.removeChild(svg.firstChild);

  const [, plotBottom] = plotSpanY(doc);
  const [plotLeft] = plotSpanX(doc);

  const xAxis = el("g", { class: "x-axis" });
  for (const seg of doc.x_axis) {
    if (seg.hi - seg.lo <= 2 * BRACKET_INSET) continue;
    xAxis.appendChild(
      el("path", {
        d: bracketPathX(seg, plotBottom + AXIS_PAD),
        fill: "none",
        stroke: "#444",
        "data-axis": "x",
        "data-label": seg.label,
      }),
    );
    const label = el("text", {
      x: (seg.lo + seg.hi) / 2,
      y: plotBottom + AXIS_PAD + BRACKET_TICK + 12,
      "text-anchor": "middle",
      "font-size": 11,
    });
    label.textContent = seg.label;
    xAxis.appendChild(label);
  }
  svg.appendChild(xAxis);

  const yAxis = el("g", { class: "y-axis" });
  for (const seg of doc.y_axis) {
    if (seg.hi - seg.lo <= 2 * BRACKET_INSET) continue;
    yAxis.appendChild(
      el("path", {
        d: bracketPathY(seg, plotLeft - AXIS_PAD),
        fill: "none",
        stroke: "#444",
        "data-axis": "y",
        "data-label": seg.label,
      }),
    );
    const label = el("text", {
      x: plotLeft - AXIS_PAD - BRACKET_TICK - 4,
      y: (seg.lo + seg.hi) / 2 + 4,
      "text-anchor": "end",
      "font-size": 11,
    });
    label.textContent = seg.label;
    yAxis.appendChild(label);
  }
  svg.appendChild(yAxis);

  const marks = el("g", { class: "marks" });
  for (const m of doc.marks) {
    marks.appendChild(
      el("rect", {
        id: `mark-${m.id}`,
        x: m.x,
        y: m.y,
        width: m.w,
        height: m.h,
        rx: m.r,
        fill: resolveFill(m.fill),
      }),
    );
  }
  svg.appendChild(marks);
}
