/**
 * Browser bootstrap: wires the chat form, context-flag toggles, the polled
 * state gauge and the recommendation panel to the service API.
 *
 * The only client-side state is the session id (+ entered coordinates);
 * everything displayed comes from server responses, so a reload followed by
 * the state poll reproduces the view for the same session.
 */

import { ApiClient, ApiError, type ContextFlags } from "./api.js";
import {
  renderErrorBubble,
  renderSpotCards,
  renderStatePanel,
  renderTurnBubble,
  renderUserBubble,
} from "./view.js";

const POLL_INTERVAL_MS = 4000;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function flagSummary(flags: ContextFlags): string {
  return Object.entries(flags)
    .map(([key, value]) => `${key.replaceAll("_", " ")}: ${value}`)
    .join(", ");
}

async function boot(): Promise<void> {
  const api = new ApiClient("");
  const log = el<HTMLDivElement>("chat-log");
  const form = el<HTMLFormElement>("chat-form");
  const input = el<HTMLInputElement>("utterance");
  const statePanel = el<HTMLDivElement>("state-panel");
  const spotsPanel = el<HTMLDivElement>("spots-panel");
  const locateButton = el<HTMLButtonElement>("locate");
  const manualLat = el<HTMLInputElement>("lat");
  const manualLon = el<HTMLInputElement>("lon");
  const radius = el<HTMLInputElement>("radius");

  const stored = sessionStorage.getItem("mindtour-session");
  let sessionId: string;
  try {
    if (stored) {
      await api.getState(stored); // still alive server-side?
      sessionId = stored;
    } else {
      sessionId = (await api.createSession()).session_id;
    }
  } catch {
    sessionId = (await api.createSession()).session_id;
  }
  sessionStorage.setItem("mindtour-session", sessionId);

  const refreshState = async () => {
    const state = await api.getState(sessionId);
    statePanel.innerHTML = renderStatePanel(state);
  };

  const refreshSpots = async () => {
    const lat = manualLat.value ? Number(manualLat.value) : undefined;
    const lon = manualLon.value ? Number(manualLon.value) : undefined;
    const radiusKm = radius.value && lat !== undefined ? Number(radius.value) : undefined;
    try {
      const result = await api.getRecommendations(sessionId, { lat, lon, radiusKm, limit: 5 });
      spotsPanel.innerHTML = renderSpotCards(result.spots);
    } catch (error) {
      if (error instanceof ApiError && error.code === "empty_catalog") {
        spotsPanel.innerHTML = `<div class="spots empty">no spots within ${radius.value} km</div>`;
      } else {
        throw error;
      }
    }
  };

  const gatherFlags = (): ContextFlags => {
    const flags: ContextFlags = {};
    const prospect = (el<HTMLSelectElement>("flag-prospect")).value;
    if (prospect !== "none") flags.prospect = prospect as ContextFlags["prospect"];
    if (el<HTMLInputElement>("flag-other").checked) {
      flags.affected_party = "other";
      const desirability = (el<HTMLSelectElement>("flag-desirability")).value;
      if (desirability !== "n/a") {
        flags.desirability_for_other = desirability as ContextFlags["desirability_for_other"];
      }
    }
    const approval = (el<HTMLSelectElement>("flag-approval")).value;
    if (approval !== "n/a") {
      flags.approval = approval as ContextFlags["approval"];
      if (el<HTMLInputElement>("flag-agent-other").checked) flags.agent_of_event = "other";
    }
    return flags;
  };

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    const text = input.value.trim();
    if (!text) return;
    const flags = gatherFlags();
    log.insertAdjacentHTML("beforeend", renderUserBubble(text, flagSummary(flags)));
    input.value = "";
    try {
      const report = await api.postUtterance(sessionId, text, flags);
      log.insertAdjacentHTML("beforeend", renderTurnBubble(report));
      spotsPanel.innerHTML = renderSpotCards(report.recommendations);
      await refreshState();
    } catch (error) {
      const code = error instanceof ApiError ? error.code : "network_error";
      const message = error instanceof Error ? error.message : String(error);
      log.insertAdjacentHTML("beforeend", renderErrorBubble(code, message));
    }
    log.scrollTop = log.scrollHeight;
  });

  locateButton.addEventListener("click", () => {
    if (!navigator.geolocation) {
      locateButton.textContent = "no geolocation; type coordinates";
      return;
    }
    navigator.geolocation.getCurrentPosition(
      (position) => {
        manualLat.value = position.coords.latitude.toFixed(4);
        manualLon.value = position.coords.longitude.toFixed(4);
        void refreshSpots();
      },
      () => {
        // denied or unavailable: the manual inputs stay as the fallback path
        locateButton.textContent = "denied; type coordinates";
      },
    );
  });
  manualLat.addEventListener("change", () => void refreshSpots());
  manualLon.addEventListener("change", () => void refreshSpots());
  radius.addEventListener("change", () => void refreshSpots());

  await refreshState();
  await refreshSpots();
  setInterval(() => void refreshState(), POLL_INTERVAL_MS);
}

void boot();
