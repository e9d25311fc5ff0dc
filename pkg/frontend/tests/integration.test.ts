/**
 * Full-turn check against a locally running service: the client sends an
 * utterance, renders the turn (emotions, state badge, recommendations), and
 * the displayed state always equals what GET state reports.
 *
 * The service process is spawned from the repository's Python package; the
 * suite fails fast with a clear message if it cannot boot.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { displayedState, renderStateBadge, renderTurnBubble, renderSpotCards } from "../src/view.js";

const PORT = 8765 + Math.floor(Math.random() * 200);
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;
const api = new ApiClient(BASE);

async function waitForHealth(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const health = await api.health();
      if (health.status === "ok") return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service did not come up on ${BASE}: ${lastError}`);
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "mindtour.cli", "serve", "--port", String(PORT), "--host", "127.0.0.1"],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForHealth();
}, 30000);

afterAll(() => {
  service?.kill();
});

describe("live service round trip", () => {
  it("renders a full turn and keeps the badge equal to GET state", async () => {
    const session = await api.createSession();
    expect(session.state).toBe("quiet");

    // fresh badge matches GET state before any turn
    let state = await api.getState(session.session_id);
    expect(displayedState(renderStateBadge(state.state))).toBe("quiet");

    const report = await api.postUtterance(session.session_id, "V(S:I, O:cake, P:eat)");
    const bubble = renderTurnBubble(report);
    expect(report.emotions.length).toBeGreaterThan(0);
    expect(bubble).toContain("joy");
    expect(report.recommendations.length).toBeGreaterThanOrEqual(1);
    expect(renderSpotCards(report.recommendations)).toContain("profile match");

    // the badge rendered from the report agrees with the polled state
    state = await api.getState(session.session_id);
    expect(state.state).toBe(report.state_after);
    expect(displayedState(renderStateBadge(report.state_after))).toBe(state.state);
    expect(state.turns).toBe(1);
  });

  it("keeps the badge in sync across several turns and a reload", async () => {
    const session = await api.createSession();
    const texts = [
      "V(S:I, O:okonomiyaki, P:eat)",
      "V(S:I, O:wallet, P:lose)",
      "A(S:scenery, C:beautiful)",
    ];
    for (const text of texts) {
      const report = await api.postUtterance(session.session_id, text);
      const state = await api.getState(session.session_id);
      expect(state.state).toBe(report.state_after);
      expect(displayedState(renderStateBadge(state.state))).toBe(report.state_after);
    }
    // a "reload": a fresh client with only the session id reproduces the view
    const reloaded = new ApiClient(BASE);
    const state = await api.getState(session.session_id);
    const replayedState = await reloaded.getState(session.session_id);
    expect(replayedState).toEqual(state);
  });

  it("geolocation parameters filter the recommendation panel", async () => {
    const session = await api.createSession();
    const nearby = await api.getRecommendations(session.session_id, {
      lat: 34.3955,
      lon: 132.4536,
      radiusKm: 5,
      limit: 5,
    });
    expect(nearby.spots.length).toBeGreaterThanOrEqual(1);
    for (const spot of nearby.spots) {
      expect(spot.distance_km).not.toBeNull();
      expect(spot.distance_km as number).toBeLessThanOrEqual(5);
    }
    expect(nearby.spots.map((s) => s.name)).not.toContain("Miyajima");
  });

  it("surfaces engine errors with their codes", async () => {
    const session = await api.createSession();
    const bad = api.postUtterance(session.session_id, "V(S:I, X:foo, P:go)");
    await expect(bad).rejects.toMatchObject({ code: "unknown_signature" });
  });
});
