// Fold interactions on axis brackets.
//
// A plain click cycles a segment between normal and minimized; a
// modifier-click maximizes it (the layout engine then minimizes every
// other segment on that axis). Modifier-clicking an already-maximized
// segment restores the axis. The returned params are a new object; the
// session re-fetches the layout from them.

import type { PlotParams } from "./params.js";
import type { FoldState } from "./types.js";

export function cycleFold(
  params: PlotParams,
  axis: "x" | "y",
  label: string,
  modifier: boolean,
): PlotParams {
  const key = axis === "x" ? "xFolds" : "yFolds";
  const folds: Record<string, FoldState> = { ...params[key] };
  if (modifier) {
    if (folds[label] === "maximized") {
      for (const name of Object.keys(folds)) delete folds[name];
    } else {
      for (const name of Object.keys(folds)) delete folds[name];
      folds[label] = "maximized";
    }
  } else if (folds[label] === "minimized") {
    delete folds[label];
  } else {
    if (folds[label] === "maximized") {
      // dropping a maximize also releases the implied minimizations
      for (const name of Object.keys(folds)) delete folds[name];
    }
    folds[label] = "minimized";
  }
  return { ...params, [key]: folds };
}
