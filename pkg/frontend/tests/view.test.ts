import { describe, expect, it } from "vitest";

import type { SessionState, SpotCard, TurnReport } from "../src/api.js";
import {
  MENTAL_STATES,
  displayedState,
  escapeHtml,
  renderAffectGauge,
  renderEmotions,
  renderErrorBubble,
  renderSpotCards,
  renderStateBadge,
  renderStatePanel,
  renderTurnBubble,
  renderUserBubble,
} from "../src/view.js";

const spot: SpotCard = {
  name: "Miyajima",
  latitude: 34.296,
  longitude: 132.3199,
  description: "Island shrine with the floating torii gate.",
  profile: { happy: 0.2, angry: 0.0, surprise: 0.1, sad: 0.0, disgust: 0.0, fear: 0.0 },
  affect_distance: 0.31,
  distance_km: 16.5,
};

const report: TurnReport = {
  session_id: "abc",
  kind: "utterance",
  stimulus: "V(S:I, O:cake, P:eat)",
  state_before: "quiet",
  state_after: "happy",
  chosen_group: 2,
  groups: [0, 0.62, 0, 0, 0, 0, 0, 0, 0],
  emotions: [{ emotion: "joy", strength: 0.62 }],
  recommendations: [spot],
  egc: {
    vector: [0.5, 0.8, 0.6],
    used_beta: false,
    area: "I",
    valence: "pleasure",
    intensity: 0.62,
  },
};

describe("state badge", () => {
  it("lists all seven states with exactly one active", () => {
    const html = renderStateBadge("happy");
    for (const state of MENTAL_STATES) {
      expect(html).toContain(`data-state="${state}"`);
    }
    expect(html.match(/state-pill active/g)).toHaveLength(1);
    expect(displayedState(html)).toBe("happy");
  });

  it("tracks whichever state the payload names", () => {
    expect(displayedState(renderStateBadge("disgust"))).toBe("disgust");
  });
});

describe("turn bubble", () => {
  it("shows the transition, the emotions and the valence", () => {
    const html = renderTurnBubble(report);
    expect(html).toContain("quiet");
    expect(html).toContain("happy");
    expect(html).toContain("joy");
    expect(html).toContain("0.62");
    expect(html).toContain("pleasure");
    expect(html).toContain('data-state="happy"');
  });

  it("marks idle drift when no group was chosen", () => {
    const idle = { ...report, chosen_group: null, emotions: [], egc: null };
    const html = renderTurnBubble(idle);
    expect(html).toContain("idle drift");
    expect(html).toContain("no emotion aroused");
  });
});

describe("affect gauge", () => {
  it("renders six labeled bars with widths from the payload", () => {
    const html = renderAffectGauge({ happy: 0.5, angry: 0, surprise: 0.25, sad: 1, disgust: 0, fear: 0 });
    expect(html).toContain("width:50%");
    expect(html).toContain("width:25%");
    expect(html).toContain("width:100%");
    expect(html.match(/gauge-row/g)).toHaveLength(6);
  });

  it("clamps out-of-range values instead of breaking the layout", () => {
    const html = renderAffectGauge({ happy: 1.7, angry: -0.2, surprise: 0, sad: 0, disgust: 0, fear: 0 });
    expect(html).toContain("width:100%");
    expect(html).toContain("width:0%");
  });
});

describe("spot cards", () => {
  it("shows name, distance and match", () => {
    const html = renderSpotCards([spot]);
    expect(html).toContain("Miyajima");
    expect(html).toContain("16.5 km");
    expect(html).toContain("profile match 69%");
  });

  it("omits the km chip without a location", () => {
    const html = renderSpotCards([{ ...spot, distance_km: null }]);
    expect(html).not.toContain("km</span>");
  });

  it("has an empty message", () => {
    expect(renderSpotCards([])).toContain("no spots within range");
  });
});

describe("state panel", () => {
  it("combines badge, meta and gauge from one payload", () => {
    const state: SessionState = {
      session_id: "abc",
      state: "sad",
      affect: { happy: 0, angry: 0, surprise: 0, sad: 0.4, disgust: 0, fear: 0 },
      turns: 3,
      pending_prospects: 1,
    };
    const html = renderStatePanel(state);
    expect(displayedState(html)).toBe("sad");
    expect(html).toContain("3 turns");
    expect(html).toContain("1 open prospect");
  });
});

describe("escaping", () => {
  it("neutralizes markup in user text and server strings", () => {
    expect(escapeHtml("<img onerror=x>")).not.toContain("<img");
    const html = renderUserBubble("<script>alert(1)</script>", "");
    expect(html).not.toContain("<script>");
    const err = renderErrorBubble("syntax_error", '<b>"quoted"</b>');
    expect(err).toContain("&lt;b&gt;");
  });
});
