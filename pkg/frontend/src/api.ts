/**
 * Typed client for the mindtour concierge HTTP API.
 *
 * Every view in the app renders exclusively from these response payloads;
 * no affect logic lives client-side.
 */

export interface EmotionEntry {
  emotion: string;
  strength: number;
}

export interface SpotCard {
  name: string;
  latitude: number;
  longitude: number;
  description: string;
  profile: Record<string, number>;
  affect_distance: number;
  distance_km: number | null;
}

export interface EgcInfo {
  vector: number[];
  used_beta: boolean;
  area: string;
  valence: string;
  intensity: number;
}

export interface TurnReport {
  session_id: string;
  kind: string;
  stimulus: string;
  state_before: string;
  state_after: string;
  chosen_group: number | null;
  groups: number[];
  emotions: EmotionEntry[];
  recommendations: SpotCard[];
  egc: EgcInfo | null;
}

export interface SessionState {
  session_id: string;
  state: string;
  affect: Record<string, number>;
  turns: number;
  pending_prospects: number;
}

export interface SessionInfo {
  session_id: string;
  persona: string | null;
  state: string;
}

/** Context flags the engine cannot infer from text; all optional. */
export interface ContextFlags {
  agent_of_event?: "self" | "other";
  affected_party?: "self" | "other";
  desirability_for_other?: "desirable" | "undesirable" | "n/a";
  prospect?: "none" | "prospective" | "confirmed" | "disconfirmed";
  approval?: "approve" | "disapprove" | "n/a";
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<never> {
  let code = "http_error";
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    if (body?.error?.code) {
      code = body.error.code;
      message = body.error.message ?? message;
    } else if (body?.detail) {
      message = JSON.stringify(body.detail);
    }
  } catch {
    // non-JSON error body: keep the status line
  }
  throw new ApiError(code, message, response.status);
}

export class ApiClient {
  constructor(readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      await parseError(response);
    }
    return (await response.json()) as T;
  }

  createSession(persona?: string): Promise<SessionInfo> {
    return this.request<SessionInfo>("/sessions", {
      method: "POST",
      body: JSON.stringify(persona ? { persona } : {}),
    });
  }

  postUtterance(sessionId: string, text: string, context?: ContextFlags): Promise<TurnReport> {
    const payload: { text: string; context?: Record<string, string> } = { text };
    if (context && Object.keys(context).length > 0) {
      payload.context = Object.fromEntries(
        Object.entries(context).filter(([, value]) => value !== undefined),
      ) as Record<string, string>;
    }
    return this.request<TurnReport>(`/sessions/${sessionId}/utterances`, {
      method: "POST",
      body: JSON.stringify(payload),
    });
  }

  getState(sessionId: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${sessionId}/state`);
  }

  getRecommendations(
    sessionId: string,
    options: { lat?: number; lon?: number; radiusKm?: number; limit?: number } = {},
  ): Promise<{ session_id: string; spots: SpotCard[] }> {
    const params = new URLSearchParams();
    if (options.lat !== undefined) params.set("lat", String(options.lat));
    if (options.lon !== undefined) params.set("lon", String(options.lon));
    if (options.radiusKm !== undefined) params.set("radius_km", String(options.radiusKm));
    if (options.limit !== undefined) params.set("limit", String(options.limit));
    const query = params.size > 0 ? `?${params.toString()}` : "";
    return this.request(`/sessions/${sessionId}/recommendations${query}`);
  }

  getSpots(): Promise<{ spots: Omit<SpotCard, "affect_distance" | "distance_km">[] }> {
    return this.request("/spots");
  }

  health(): Promise<{ status: string; sessions: number }> {
    return this.request("/health");
  }
}
