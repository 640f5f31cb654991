import { describe, expect, it } from "vitest";

import { cycleFold } from "../src/folds.js";
import { defaultParams } from "../src/params.js";

describe("cycleFold", () => {
  const base = { ...defaultParams(), x: "class" };

  it("click cycles normal -> minimized -> normal", () => {
    const once = cycleFold(base, "x", "crew", false);
    expect(once.xFolds).toEqual({ crew: "minimized" });
    const twice = cycleFold(once, "x", "crew", false);
    expect(twice.xFolds).toEqual({});
  });

  it("modifier-click maximizes, replacing prior folds on that axis", () => {
    const folded = cycleFold(base, "x", "crew", false);
    const maxed = cycleFold(folded, "x", "first", true);
    expect(maxed.xFolds).toEqual({ first: "maximized" });
  });

  it("modifier-click on a maximized segment restores the axis", () => {
    const maxed = cycleFold(base, "x", "first", true);
    const restored = cycleFold(maxed, "x", "first", true);
    expect(restored.xFolds).toEqual({});
  });

  it("plain click on a maximized segment minimizes it and releases the rest", () => {
    const maxed = cycleFold(base, "x", "first", true);
    const clicked = cycleFold(maxed, "x", "first", false);
    expect(clicked.xFolds).toEqual({ first: "minimized" });
  });

  it("does not mutate the input params", () => {
    const before = JSON.stringify(base);
    cycleFold(base, "x", "crew", false);
    expect(JSON.stringify(base)).toBe(before);
  });

  it("folds the axes independently", () => {
    const both = cycleFold(cycleFold(base, "x", "a", false), "y", "b", false);
    expect(both.xFolds).toEqual({ a: "minimized" });
    expect(both.yFolds).toEqual({ b: "minimized" });
  });
});
