import { describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("builds preview query strings and parses the body", async () => {
    const fetchImpl = vi.fn(async () =>
      jsonResponse(200, { window: {}, interval_days: 15, sample: [], stats: {} }),
    );
    const api = new ApiClient("", fetchImpl);
    const preview = await api.preview("2008-05-10", "2008-05-25", 4);
    expect(fetchImpl).toHaveBeenCalledWith(
      "/api/preview?start=2008-05-10&end=2008-05-25&k=4",
    );
    expect(preview.interval_days).toBe(15);
  });

  it("posts mine requests as JSON", async () => {
    const fetchImpl = vi.fn(async () => jsonResponse(202, { job_id: "abc" }));
    const api = new ApiClient("", fetchImpl);
    const out = await api.submitMine({
      start: "2008-05-10",
      end: "2008-05-25",
      min_support: 2,
      algorithm: "rsp",
    });
    expect(out.job_id).toBe("abc");
    const [url, init] = fetchImpl.mock.calls[0] as unknown as [string, RequestInit];
    expect(url).toBe("/api/mine");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string).min_support).toBe(2);
  });

  it("surfaces the backend's detail message on errors", async () => {
    const fetchImpl = vi.fn(async () => jsonResponse(400, { detail: "window start is after end" }));
    const api = new ApiClient("", fetchImpl);
    await expect(api.preview("2008-05-25", "2008-05-10", 4)).rejects.toThrow(
      "window start is after end",
    );
    await expect(api.preview("2008-05-25", "2008-05-10", 4)).rejects.toBeInstanceOf(ApiError);
  });

  it("falls back to the status line for non-JSON errors", async () => {
    const fetchImpl = vi.fn(
      async () => new Response("boom", { status: 502, statusText: "Bad Gateway" }),
    );
    const api = new ApiClient("", fetchImpl);
    await expect(api.stats()).rejects.toThrow("502 Bad Gateway");
  });

  it("points the CSV link at the job's export", () => {
    const api = new ApiClient();
    expect(api.resultsCsvUrl("abc")).toBe("/api/results/abc/csv");
  });
});
