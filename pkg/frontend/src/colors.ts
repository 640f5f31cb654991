// Fill-token resolution, matching the server renderer's default theme so
// the browser view and exported SVG agree.

export const PALETTE = [
  "#4e79a7",
  "#f28e2b",
  "#e15759",
  "#76b7b2",
  "#59a14f",
  "#edc948",
  "#b07aa1",
  "#ff9da7",
  "#9c755f",
  "#bab0ac",
] as const;

export const RAMP: readonly [string, string] = ["#d4e5f4", "#08306b"];
export const MISSING_COLOR = "#b0b0b0";
export const DEFAULT_COLOR = "#4e79a7";

function hexToRgb(color: string): [number, number, number] {
  return [
    parseInt(color.slice(1, 3), 16),
    parseInt(color.slice(3, 5), 16),
    parseInt(color.slice(5, 7), 16),
  ];
}

function mix(a: string, b: string, t: number): string {
  const clamped = Math.min(Math.max(t, 0), 1);
  const [ra, ga, ba] = hexToRgb(a);
  const [rb, gb, bb] = hexToRgb(b);
  const channel = (x: number, y: number) =>
    Math.round(x + (y - x) * clamped)
      .toString(16)
      .padStart(2, "0");
  return `#${channel(ra, rb)}${channel(ga, gb)}${channel(ba, bb)}`;
}

export function resolveFill(token: string): string {
  if (token === "m") return MISSING_COLOR;
  if (token.startsWith("c")) {
    const idx = parseInt(token.slice(1), 10);
    return PALETTE[idx % PALETTE.length]!;
  }
  if (token.startsWith("v")) return mix(RAMP[0], RAMP[1], parseFloat(token.slice(1)));
  return DEFAULT_COLOR;
}
