/** Typed client for the seqmine JSON API. */

export interface DatasetStats {
  objects: number;
  records: number;
  items: number;
  time_span: [string, string] | null;
}

export interface PreviewRow {
  object_id: number | string;
  sequence: string;
  length: number;
}

export interface PreviewStats {
  object_count: number;
  min_length: number;
  avg_length: number;
  max_length: number;
  distinct_items: number;
  interval_days: number;
}

export interface PreviewResponse {
  window: { start: string; end: string };
  interval_days: number;
  sample: PreviewRow[];
  stats: PreviewStats;
}

export interface MineRequest {
  start: string;
  end: string;
  min_support: number;
  max_len?: number | null;
  algorithm: "rsp" | "gsp";
}

export interface JobView {
  id: string;
  state: "pending" | "running" | "done" | "failed";
  algorithm: string;
  window: { start: string; end: string };
  min_support: number;
  error?: string;
}

export interface PatternRow {
  pattern: string;
  length: number;
  support: number;
  relative_support: number;
}

export interface ResultView {
  patterns: PatternRow[];
  object_count: number;
  threshold: number;
  algorithm: string;
  job_id: string;
  window: { start: string; end: string; interval_days: number };
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function parseError(resp: Response): Promise<never> {
  let detail = `${resp.status} ${resp.statusText}`;
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(
    private readonly base = "",
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchImpl(this.base + path);
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as T;
  }

  stats(): Promise<DatasetStats> {
    return this.getJson("/api/stats");
  }

  preview(start: string, end: string, k: number): Promise<PreviewResponse> {
    const params = new URLSearchParams({ start, end, k: String(k) });
    return this.getJson(`/api/preview?${params}`);
  }

  async submitMine(req: MineRequest): Promise<{ job_id: string }> {
    const resp = await this.fetchImpl(`${this.base}/api/mine`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    });
    if (!resp.ok) await parseError(resp);
    return (await resp.json()) as { job_id: string };
  }

  job(id: string): Promise<JobView> {
    return this.getJson(`/api/jobs/${id}`);
  }

  results(id: string): Promise<ResultView> {
    return this.getJson(`/api/results/${id}`);
  }

  resultsCsvUrl(id: string): string {
    return `${this.base}/api/results/${id}/csv`;
  }
}
