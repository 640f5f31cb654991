// Plot request parameters and their URL encoding.
//
// The vocabulary matches the service's /layout query parameters, so the
// page URL doubles as a deep link: any view is reproducible from
// (dataset id, query string) alone.

import type { AllocationName, FoldState, ModeRequest, TransformName } from "./types.js";

export interface PlotParams {
  x: string;
  y: string;
  xTransform: TransformName;
  yTransform: TransformName;
  xAllocation: AllocationName;
  yAllocation: AllocationName;
  xFolds: Record<string, FoldState>;
  yFolds: Record<string, FoldState>;
  color: string | null;
  mode: ModeRequest;
  width: number;
  height: number;
  bins: Record<string, number>;
  seed: number;
  jitter: number | null;
}

export const UNDEFINED_AXIS = "undefined";

export function defaultParams(): PlotParams {
  return {
    x: UNDEFINED_AXIS,
    y: UNDEFINED_AXIS,
    xTransform: "gather",
    yTransform: "gather",
    xAllocation: "uniform",
    yAllocation: "uniform",
    xFolds: {},
    yFolds: {},
    color: null,
    mode: "absolute",
    width: 640,
    height: 480,
    bins: {},
    seed: 0,
    jitter: null,
  };
}

const SCALAR_KEYS: ReadonlyArray<
  [keyof PlotParams, string]
> = [
  ["x", "x"],
  ["y", "y"],
  ["xTransform", "x_transform"],
  ["yTransform", "y_transform"],
  ["xAllocation", "x_allocation"],
  ["yAllocation", "y_allocation"],
  ["color", "color"],
  ["mode", "mode"],
  ["width", "width"],
  ["height", "height"],
  ["seed", "seed"],
  ["jitter", "jitter"],
];

/** Serialize to the service's query vocabulary, omitting defaults. */
export function toQuery(params: PlotParams): string {
  const defaults = defaultParams();
  const search = new URLSearchParams();
  for (const [field, wire] of SCALAR_KEYS) {
    const value = params[field];
    if (value === null || value === defaults[field]) continue;
    search.append(wire, String(value));
  }
  for (const dim of Object.keys(params.bins).sort()) {
    search.append("bin", `${dim}:${params.bins[dim]}`);
  }
  for (const [wire, folds] of [
    ["x_fold", params.xFolds],
    ["y_fold", params.yFolds],
  ] as const) {
    for (const label of Object.keys(folds).sort()) {
      search.append(wire, `${label}:${folds[label]}`);
    }
  }
  return search.toString();
}

function splitTagged(item: string): [string, string] {
  const idx = item.lastIndexOf(":");
  if (idx <= 0) throw new Error(`expected label:value, got ${JSON.stringify(item)}`);
  return [item.slice(0, idx), item.slice(idx + 1)];
}

/** Parse a query string back into params; unknown keys are ignored. */
export function fromQuery(query: string): PlotParams {
  const params = defaultParams();
  const search = new URLSearchParams(query);
  for (const [field, wire] of SCALAR_KEYS) {
    const raw = search.get(wire);
    if (raw === null) continue;
    switch (field) {
      case "width":
      case "height":
      case "seed":
        (params[field] as number) = parseInt(raw, 10);
        break;
      case "jitter":
        params.jitter = parseFloat(raw);
        break;
      default:
        (params[field] as string) = raw;
    }
  }
  for (const item of search.getAll("bin")) {
    const [dim, width] = splitTagged(item);
    params.bins[dim] = parseFloat(width);
  }
  for (const item of search.getAll("x_fold")) {
    const [label, state] = splitTagged(item);
    params.xFolds[label] = state as FoldState;
  }
  for (const item of search.getAll("y_fold")) {
    const [label, state] = splitTagged(item);
    params.yFolds[label] = state as FoldState;
  }
  return params;
}
