import { describe, expect, it } from "vitest";

import { defaultParams, fromQuery, toQuery } from "../src/params.js";

describe("plot params URL codec", () => {
  it("omits defaults entirely", () => {
    expect(toQuery(defaultParams())).toBe("");
  });

  it("round-trips a full request", () => {
    const params = {
      ...defaultParams(),
      x: "origin",
      y: "mpg",
      color: "cylinders",
      mode: "relative" as const,
      width: 800,
      height: 600,
      bins: { mpg: 5, weight: 250.5 },
      xFolds: { Europe: "minimized" as const },
      yFolds: { "22.5±2.5": "maximized" as const },
      seed: 7,
      jitter: 4.5,
    };
    const query = toQuery(params);
    expect(fromQuery(query)).toEqual(params);
  });

  it("ignores unknown keys like the dataset id", () => {
    const params = fromQuery("dataset=ds-3&x=origin");
    expect(params.x).toBe("origin");
  });

  it("keeps colons inside fold labels intact", () => {
    const params = { ...defaultParams(), x: "c", xFolds: { "a:b": "minimized" as const } };
    expect(fromQuery(toQuery(params)).xFolds).toEqual({ "a:b": "minimized" });
  });

  it("uses the service wire names", () => {
    const query = toQuery({ ...defaultParams(), x: "origin", xTransform: "jitter" });
    expect(query).toContain("x=origin");
    expect(query).toContain("x_transform=jitter");
  });
});
