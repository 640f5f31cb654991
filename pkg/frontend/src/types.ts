// Wire types for the layout service. These mirror the canonical layout
// JSON document and the dataset schema responses exactly; the client never
// derives geometry beyond tweening between two of these documents.

export type FoldState = "normal" | "minimized" | "maximized";
export type TransformName = "scatter" | "jitter" | "gather";
export type AllocationName = "uniform" | "proportional";
export type ModeRequest = "absolute" | "relative";
export type ModeEffective = "absolute" | "relative" | "streamgraph";

export interface SegmentDoc {
  label: string;
  lo: number;
  hi: number;
  state: FoldState;
}

export interface MarkDoc {
  id: number;
  x: number;
  y: number;
  w: number;
  h: number;
  r: number;
  fill: string;
}

export interface ModeDoc {
  requested: ModeRequest;
  effective: ModeEffective;
  auto_switched: boolean;
}

export interface LayoutDoc {
  canvas: { width: number; height: number };
  mode: ModeDoc;
  x_axis: SegmentDoc[];
  y_axis: SegmentDoc[];
  marks: MarkDoc[];
}

export interface DimensionInfo {
  name: string;
  kind: "nominal" | "ordinal" | "quantitative";
  domain: unknown[];
  missing: number;
}

export interface DatasetInfo {
  id: string;
  rows: number;
  dimensions: DimensionInfo[];
}

/** Pixel extent [left, right] of the plot area, from the axis segments. */
export function plotSpanX(doc: LayoutDoc): [number, number] {
  const lows = doc.x_axis.map((s) => s.lo);
  const highs = doc.x_axis.map((s) => s.hi);
  return [Math.min(...lows), Math.max(...highs)];
}

/** Pixel extent [top, bottom] of the plot area. */
export function plotSpanY(doc: LayoutDoc): [number, number] {
  const lows = doc.y_axis.map((s) => s.lo);
  const highs = doc.y_axis.map((s) => s.hi);
  return [Math.min(...lows), Math.max(...highs)];
}
