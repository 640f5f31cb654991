// Browser bootstrap: controls, URL state, hit testing, and the session.

import { ApiClient } from "./api.js";
import { DEFAULT_TRANSITION_MS, Session } from "./app.js";
import { cycleFold } from "./folds.js";
import { hitTest, segmentCount } from "./hitTest.js";
import { defaultParams, fromQuery, toQuery, UNDEFINED_AXIS, type PlotParams } from "./params.js";
import { renderLayout } from "./render.js";
import type { DatasetInfo, LayoutDoc } from "./types.js";

const API_BASE = (window as { GATHERPLOT_API?: string }).GATHERPLOT_API ?? "http://127.0.0.1:8080";

const api = new ApiClient(API_BASE);
const svg = document.querySelector<SVGSVGElement>("#plot")!;
const toast = document.querySelector<HTMLDivElement>("#toast")!;
const tooltip = document.querySelector<HTMLDivElement>("#tooltip")!;

let info: DatasetInfo | null = null;
let params: PlotParams = defaultParams();
let latestDoc: LayoutDoc | null = null;

function showToast(message: string): void {
  toast.textContent = message;
  toast.classList.add("visible");
  window.setTimeout(() => toast.classList.remove("visible"), 4000);
}

const session = new Session(api, {
  onFrame: (doc) => {
    renderLayout(svg, doc);
  },
  onSettled: (doc) => {
    latestDoc = doc;
    syncUrl();
  },
  onError: showToast,
});

function syncUrl(): void {
  const query = new URLSearchParams(toQuery(params));
  if (info) query.set("dataset", info.id);
  history.replaceState(null, "", `${location.pathname}?${query.toString()}`);
}

function apply(next: PlotParams): void {
  if (!info) return;
  params = next;
  void session.applyRequest(info.id, params);
}

function select(id: string): HTMLSelectElement {
  return document.querySelector<HTMLSelectElement>(`#${id}`)!;
}

function rebuildDimensionSelects(): void {
  if (!info) return;
  for (const [id, allowUndefined] of [
    ["x-dim", true],
    ["y-dim", true],
    ["color-dim", true],
  ] as const) {
    const node = select(id);
    node.innerHTML = "";
    if (allowUndefined) {
      const opt = document.createElement("option");
      opt.value = "";
      opt.textContent = id === "color-dim" ? "(none)" : "(undefined)";
      node.appendChild(opt);
    }
    for (const dim of info.dimensions) {
      const opt = document.createElement("option");
      opt.value = dim.name;
      opt.textContent = `${dim.name} (${dim.kind})`;
      node.appendChild(opt);
    }
  }
  select("x-dim").value = params.x === UNDEFINED_AXIS ? "" : params.x;
  select("y-dim").value = params.y === UNDEFINED_AXIS ? "" : params.y;
  select("color-dim").value = params.color ?? "";
}

function wireControls(): void {
  select("x-dim").addEventListener("change", (ev) => {
    const value = (ev.target as HTMLSelectElement).value;
    apply({ ...params, x: value || UNDEFINED_AXIS, xFolds: {} });
  });
  select("y-dim").addEventListener("change", (ev) => {
    const value = (ev.target as HTMLSelectElement).value;
    apply({ ...params, y: value || UNDEFINED_AXIS, yFolds: {} });
  });
  select("color-dim").addEventListener("change", (ev) => {
    const value = (ev.target as HTMLSelectElement).value;
    apply({ ...params, color: value || null });
  });
  // one-click comparison: the same data as scatter, jitter, or gather
  for (const transform of ["scatter", "jitter", "gather"] as const) {
    document.querySelector(`#btn-${transform}`)!.addEventListener("click", () => {
      apply({
        ...params,
        xTransform: transform,
        yTransform: transform,
        xFolds: {},
        yFolds: {},
      });
    });
  }
  document.querySelector("#btn-mode")!.addEventListener("click", () => {
    apply({ ...params, mode: params.mode === "absolute" ? "relative" : "absolute" });
  });

  svg.addEventListener("click", (ev) => {
    if (!latestDoc) return;
    const point = eventPoint(ev);
    const hit = hitTest(latestDoc, point.x, point.y);
    if (hit?.kind === "segment") {
      apply(cycleFold(params, hit.axis, hit.label, ev.shiftKey));
    }
  });
  svg.addEventListener("mousemove", (ev) => {
    if (!latestDoc) {
      tooltip.classList.remove("visible");
      return;
    }
    const point = eventPoint(ev);
    const hit = hitTest(latestDoc, point.x, point.y);
    if (hit === null) {
      tooltip.classList.remove("visible");
      return;
    }
    tooltip.classList.add("visible");
    tooltip.style.left = `${ev.pageX + 12}px`;
    tooltip.style.top = `${ev.pageY + 12}px`;
    tooltip.textContent =
      hit.kind === "mark"
        ? `point #${hit.id}`
        : `${hit.label}: ${segmentCount(latestDoc, hit.axis, hit.label)} points`;
  });
  svg.addEventListener("mouseleave", () => tooltip.classList.remove("visible"));

  document.querySelector<HTMLInputElement>("#csv-file")!.addEventListener("change", async (ev) => {
    const input = ev.target as HTMLInputElement;
    const file = input.files?.[0];
    if (!file) return;
    try {
      info = await api.uploadCsv(await file.text());
      params = defaultParams();
      rebuildDimensionSelects();
      apply(params);
    } catch (err) {
      showToast(err instanceof Error ? err.message : String(err));
    }
  });
}

function eventPoint(ev: MouseEvent): { x: number; y: number } {
  const rect = svg.getBoundingClientRect();
  return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

async function restoreFromUrl(): Promise<void> {
  const search = new URLSearchParams(location.search);
  const datasetId = search.get("dataset");
  if (!datasetId) return;
  try {
    info = await api.datasetInfo(datasetId);
    search.delete("dataset");
    params = fromQuery(search.toString());
    rebuildDimensionSelects();
    apply(params);
  } catch (err) {
    showToast(err instanceof Error ? err.message : String(err));
  }
}

wireControls();
void restoreFromUrl();

export { DEFAULT_TRANSITION_MS };
