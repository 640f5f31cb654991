// Thin fetch client for the layout service. The fetch implementation is
// injectable so tests can run against canned responses.

import type { PlotParams } from "./params.js";
import { toQuery } from "./params.js";
import type { DatasetInfo, LayoutDoc } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function raiseForStatus(resp: Response): Promise<Response> {
  if (resp.ok) return resp;
  let detail = `${resp.status}`;
  try {
    const body = await resp.json();
    detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
  } catch {
    // keep the bare status
  }
  throw new ApiError(detail, resp.status);
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  async uploadCsv(text: string): Promise<DatasetInfo> {
    const resp = await this.fetchImpl(`${this.base}/datasets`, {
      method: "POST",
      headers: { "content-type": "text/csv" },
      body: text,
    });
    return (await raiseForStatus(resp)).json();
  }

  async datasetInfo(id: string): Promise<DatasetInfo> {
    const resp = await this.fetchImpl(`${this.base}/datasets/${id}`);
    return (await raiseForStatus(resp)).json();
  }

  async layout(datasetId: string, params: PlotParams): Promise<LayoutDoc> {
    const query = toQuery(params);
    const url = `${this.base}/datasets/${datasetId}/layout${query ? `?${query}` : ""}`;
    const resp = await this.fetchImpl(url);
    return (await raiseForStatus(resp)).json();
  }
}
