/**
 * Pure HTML renderers: service payloads in, markup strings out.
 *
 * Keeping these free of DOM access makes every view testable in plain node
 * and guarantees the display is a function of server responses alone.
 */

import type { EmotionEntry, SessionState, SpotCard, TurnReport } from "./api.js";

/** The seven mental states, in the engine's canonical order. */
export const MENTAL_STATES = [
  "happy",
  "quiet",
  "sad",
  "surprise",
  "angry",
  "fear",
  "disgust",
] as const;

export const FEELINGS = ["happy", "angry", "surprise", "sad", "disgust", "fear"] as const;

const STATE_ICONS: Record<string, string> = {
  happy: "😊",
  quiet: "😐",
  sad: "😢",
  surprise: "😮",
  angry: "😠",
  fear: "😨",
  disgust: "🤢",
};

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** The row of seven state pills; exactly one carries the active class. */
export function renderStateBadge(state: string): string {
  const pills = MENTAL_STATES.map((name) => {
    const active = name === state ? " active" : "";
    return `<span class="state-pill${active}" data-state="${name}">${STATE_ICONS[name]} ${name}</span>`;
  });
  return `<div class="state-badge" data-current="${escapeHtml(state)}">${pills.join("")}</div>`;
}

export function renderEmotions(emotions: EmotionEntry[]): string {
  if (emotions.length === 0) {
    return `<div class="emotions empty">no emotion aroused</div>`;
  }
  const chips = emotions.map(
    (entry) =>
      `<span class="emotion-chip">${escapeHtml(entry.emotion)}` +
      `<em>${entry.strength.toFixed(2)}</em></span>`,
  );
  return `<div class="emotions">${chips.join("")}</div>`;
}

/** Six horizontal bars for the affect profile (values in [0, 1]). */
export function renderAffectGauge(affect: Record<string, number>): string {
  const rows = FEELINGS.map((feeling) => {
    const value = affect[feeling] ?? 0;
    const width = Math.round(Math.min(1, Math.max(0, value)) * 100);
    return (
      `<div class="gauge-row"><span class="gauge-label">${feeling}</span>` +
      `<span class="gauge-track"><span class="gauge-fill ${feeling}" style="width:${width}%"></span></span>` +
      `<span class="gauge-value">${value.toFixed(2)}</span></div>`
    );
  });
  return `<div class="affect-gauge">${rows.join("")}</div>`;
}

export function renderSpotCards(spots: SpotCard[]): string {
  if (spots.length === 0) {
    return `<div class="spots empty">no spots within range</div>`;
  }
  const cards = spots.map((spot) => {
    const distance =
      spot.distance_km !== null && spot.distance_km !== undefined
        ? `<span class="spot-km">${spot.distance_km.toFixed(1)} km</span>`
        : "";
    const match = Math.max(0, 1 - spot.affect_distance);
    return (
      `<div class="spot-card">` +
      `<div class="spot-head"><strong>${escapeHtml(spot.name)}</strong>${distance}</div>` +
      `<div class="spot-match">profile match ${(match * 100).toFixed(0)}%</div>` +
      `<div class="spot-desc">${escapeHtml(spot.description)}</div>` +
      `</div>`
    );
  });
  return `<div class="spots">${cards.join("")}</div>`;
}

/** One assistant-side chat entry for a completed turn. */
export function renderTurnBubble(report: TurnReport): string {
  const transition =
    report.state_before === report.state_after
      ? `stays <strong>${report.state_after}</strong>`
      : `<strong>${report.state_before}</strong> → <strong>${report.state_after}</strong>`;
  const via = report.chosen_group !== null ? ` (group ${report.chosen_group})` : " (idle drift)";
  const valence = report.egc ? `<span class="valence ${report.egc.valence}">${report.egc.valence}</span>` : "";
  return (
    `<div class="bubble assistant" data-state="${escapeHtml(report.state_after)}">` +
    `<div class="turn-transition">mental state ${transition}${via} ${valence}</div>` +
    renderEmotions(report.emotions) +
    `</div>`
  );
}

export function renderUserBubble(text: string, flagSummary: string): string {
  const flags = flagSummary ? `<div class="flag-note">${escapeHtml(flagSummary)}</div>` : "";
  return `<div class="bubble user">${escapeHtml(text)}${flags}</div>`;
}

export function renderErrorBubble(code: string, message: string): string {
  return (
    `<div class="bubble error"><strong>${escapeHtml(code)}</strong> ` +
    `${escapeHtml(message)}</div>`
  );
}

/** Header strip summarizing the polled session state. */
export function renderStatePanel(state: SessionState): string {
  return (
    renderStateBadge(state.state) +
    `<div class="state-meta">${state.turns} turns` +
    (state.pending_prospects > 0 ? ` · ${state.pending_prospects} open prospect(s)` : "") +
    `</div>` +
    renderAffectGauge(state.affect)
  );
}

/** The state a rendered badge displays (used by tests and the poller). */
export function displayedState(badgeHtml: string): string | null {
  const match = badgeHtml.match(/data-current="([^"]+)"/);
  return match ? match[1] : null;
}
