import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function mockFetch(status: number, body: unknown): ReturnType<typeof vi.fn> {
  const mock = vi.fn(async () =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "Content-Type": "application/json" },
    }),
  );
  vi.stubGlobal("fetch", mock);
  return mock;
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("posts utterances with context flags", async () => {
    const mock = mockFetch(200, { state_after: "happy" });
    const api = new ApiClient("http://service");
    await api.postUtterance("sid", "V(S:I, P:go)", { prospect: "prospective" });
    expect(mock).toHaveBeenCalledTimes(1);
    const [url, init] = mock.mock.calls[0] as [string, RequestInit];
    expect(url).toBe("http://service/sessions/sid/utterances");
    expect(init.method).toBe("POST");
    expect(JSON.parse(init.body as string)).toEqual({
      text: "V(S:I, P:go)",
      context: { prospect: "prospective" },
    });
  });

  it("omits the context key when no flag is set", async () => {
    const mock = mockFetch(200, {});
    await new ApiClient().postUtterance("sid", "V(S:I, P:go)", {});
    const [, init] = mock.mock.calls[0] as [string, RequestInit];
    expect(JSON.parse(init.body as string)).toEqual({ text: "V(S:I, P:go)" });
  });

  it("builds recommendation queries", async () => {
    const mock = mockFetch(200, { spots: [] });
    await new ApiClient().getRecommendations("sid", { lat: 34.4, lon: 132.45, radiusKm: 5, limit: 3 });
    const [url] = mock.mock.calls[0] as [string];
    expect(url).toBe("/sessions/sid/recommendations?lat=34.4&lon=132.45&radius_km=5&limit=3");
  });

  it("surfaces machine-readable error codes", async () => {
    mockFetch(422, { error: { code: "unknown_signature", message: "no such row" } });
    const call = new ApiClient().postUtterance("sid", "V(S:I, X:foo, P:go)");
    await expect(call).rejects.toMatchObject({
      name: "ApiError",
      code: "unknown_signature",
      status: 422,
    });
  });

  it("falls back to the status line on non-JSON errors", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn(async () => new Response("boom", { status: 500, statusText: "Internal Server Error" })),
    );
    await expect(new ApiClient().getState("sid")).rejects.toBeInstanceOf(ApiError);
  });
});
