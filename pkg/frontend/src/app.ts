// Session controller: server-authoritative layout with client tweening.
//
// applyRequest fetches the layout for new params and animates the previous
// view into it over DEFAULT_TRANSITION_MS. At most one request is in
// flight conceptually: a newer request supersedes an older one
// (latest-wins), and a superseded response is dropped without touching the
// view. When the animation settles, the frame handed to the view is the
// fetched server document itself, so on-screen geometry equals the server
// layout exactly. On errors the previous state stays put and the error
// surfaces through onError (rendered as a non-blocking toast).

import type { ApiClient } from "./api.js";
import type { PlotParams } from "./params.js";
import type { LayoutDoc } from "./types.js";
import { interpolateLayout, sameIdSet } from "./tween.js";

export const DEFAULT_TRANSITION_MS = 800;

export type FrameScheduler = (callback: (nowMs: number) => void) => void;

export interface SessionHooks {
  onFrame: (doc: LayoutDoc) => void;
  onSettled?: (doc: LayoutDoc, params: PlotParams) => void;
  onError?: (message: string) => void;
  /** Frame scheduler; defaults to requestAnimationFrame. Tests inject a
      manual clock here. */
  schedule?: FrameScheduler;
  now?: () => number;
}

export class Session {
  datasetId: string | null = null;
  params: PlotParams | null = null;
  layout: LayoutDoc | null = null;

  private generation = 0;
  private readonly schedule: FrameScheduler;
  private readonly now: () => number;

  constructor(
    private readonly api: ApiClient,
    private readonly hooks: SessionHooks,
    private readonly durationMs: number = DEFAULT_TRANSITION_MS,
  ) {
    this.schedule = hooks.schedule ?? ((cb) => requestAnimationFrame(cb));
    this.now = hooks.now ?? (() => performance.now());
  }

  async applyRequest(datasetId: string, params: PlotParams): Promise<void> {
    const ticket = ++this.generation;
    let next: LayoutDoc;
    try {
      next = await this.api.layout(datasetId, params);
    } catch (err) {
      if (ticket === this.generation) {
        this.hooks.onError?.(err instanceof Error ? err.message : String(err));
      }
      return;
    }
    if (ticket !== this.generation) return; // superseded: latest wins

    const previous = this.layout;
    this.datasetId = datasetId;
    this.params = params;
    this.layout = next;

    if (previous === null || !sameIdSet(previous, next)) {
      this.hooks.onFrame(next);
      this.hooks.onSettled?.(next, params);
      return;
    }
    this.animate(previous, next, params, ticket);
  }

  private animate(from: LayoutDoc, to: LayoutDoc, params: PlotParams, ticket: number): void {
    const start = this.now();
    const step = (nowMs: number) => {
      if (ticket !== this.generation) return; // a newer layout took over
      const t = Math.min((nowMs - start) / this.durationMs, 1);
      if (t >= 1) {
        this.hooks.onFrame(to); // exact server document, by reference
        this.hooks.onSettled?.(to, params);
        return;
      }
      this.hooks.onFrame(interpolateLayout(from, to, t));
      this.schedule(step);
    };
    this.schedule(step);
  }
}
