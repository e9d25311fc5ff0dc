"""Per-session pipeline wiring: utterance -> emotions -> state -> suggestions.

The :class:`Engine` owns the shared, immutable pieces (config, favorite-value
database, spot catalog, seeded transition table); each :class:`Session` owns
one state machine, one affect profile, prospect bookkeeping and an append-only
history.  Replaying a history's recorded stimuli through a fresh session
reproduces the state sequence exactly when deterministic settings are used.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Any, Mapping

from .assets import FV_LEXICON, SPOT_CATALOG, data_path
from .case_frames import parse_case_frame
from .config import EngineConfig
from .elicitation import (
    Approval,
    Desirability,
    ElicitationContext,
    EmotionInstance,
    GroupVector,
    Party,
    Prospect,
    ZERO_GROUPS,
    elicit_emotions,
    group_vector,
)
from .emotion_space import EgcResult, egc_evaluate
from .favorites import FvDatabase, load_fv_file
from .mental_states import MentalState, StateMachine
from .recommend import (
    EmptyCatalogError,
    RankedSpot,
    SpotProfile,
    UserAffectProfile,
    feeling_vector_from_groups,
    load_spot_catalog,
    rank_spots,
    update_user_profile,
)


class UnknownSessionError(KeyError):
    """No session with the given id."""


_CONTEXT_FIELDS = {
    "agent_of_event": Party,
    "affected_party": Party,
    "desirability_for_other": Desirability,
    "prospect": Prospect,
    "approval": Approval,
}


def context_from_flags(flags: Mapping[str, str] | None) -> ElicitationContext:
    """Build a context from a plain string mapping (API payloads, CLI flags)."""
    if not flags:
        return ElicitationContext()
    kwargs: dict[str, Any] = {}
    for key, value in flags.items():
        if key not in _CONTEXT_FIELDS:
            raise ValueError(
                f"unknown context flag {key!r}; valid: {', '.join(sorted(_CONTEXT_FIELDS))}"
            )
        enum_type = _CONTEXT_FIELDS[key]
        try:
            kwargs[key] = enum_type(value)
        except ValueError:
            valid = ", ".join(member.value for member in enum_type)
            raise ValueError(f"bad value {value!r} for {key}; valid: {valid}") from None
    return ElicitationContext(**kwargs)


def context_to_flags(ctx: ElicitationContext) -> dict[str, str]:
    return {name: getattr(ctx, name).value for name in _CONTEXT_FIELDS}


@dataclass(frozen=True)
class TurnReport:
    """Everything one stimulus produced, for API payloads and CSV rows."""

    kind: str  # "utterance" | "groups" | "idle"
    stimulus: str
    state_before: MentalState
    state_after: MentalState
    chosen_group: int | None
    groups: GroupVector
    emotions: list[EmotionInstance]
    egc: EgcResult | None
    recommendations: list[RankedSpot]
    timestamp: float

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "kind": self.kind,
            "stimulus": self.stimulus,
            "state_before": self.state_before.value,
            "state_after": self.state_after.value,
            "chosen_group": self.chosen_group,
            "groups": list(self.groups.strengths),
            "emotions": [
                {"emotion": e.emotion.value, "strength": e.strength} for e in self.emotions
            ],
            "recommendations": [ranked_spot_to_dict(r) for r in self.recommendations],
            "timestamp": self.timestamp,
        }
        if self.egc is not None:
            payload["egc"] = {
                "vector": list(self.egc.vector.components),
                "used_beta": self.egc.vector.used_beta,
                "area": self.egc.area.value,
                "valence": self.egc.valence.value,
                "intensity": self.egc.intensity,
            }
        else:
            payload["egc"] = None
        return payload


def ranked_spot_to_dict(ranked: RankedSpot) -> dict[str, Any]:
    return {
        "name": ranked.spot.name,
        "latitude": ranked.spot.latitude,
        "longitude": ranked.spot.longitude,
        "description": ranked.spot.description,
        "profile": dict(zip(("happy", "angry", "surprise", "sad", "disgust", "fear"),
                            ranked.spot.profile.as_tuple())),
        "affect_distance": ranked.affect_distance,
        "distance_km": ranked.distance_km,
    }


@dataclass
class Session:
    id: str
    persona: str | None
    machine: StateMachine
    affect: UserAffectProfile
    history: list[TurnReport] = field(default_factory=list)
    pending_prospects: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def state(self) -> MentalState:
        return self.machine.current


class Engine:
    """Shared pipeline front end; stateless across sessions."""

    def __init__(
        self,
        config: EngineConfig | None = None,
        fv_db: FvDatabase | None = None,
        catalog: list[SpotProfile] | None = None,
    ) -> None:
        self.config = config or EngineConfig()
        if fv_db is None:
            fv_db = load_fv_file(data_path(FV_LEXICON, self.config.data_dir))
        if catalog is None:
            catalog = load_spot_catalog(data_path(SPOT_CATALOG, self.config.data_dir))
        self.fv_db = fv_db
        self.catalog = catalog

    def create_session(self, persona: str | None = None, session_id: str | None = None) -> Session:
        return Session(
            id=session_id or uuid.uuid4().hex,
            persona=persona,
            machine=StateMachine.from_config(self.config),
            affect=UserAffectProfile(alpha=self.config.alpha),
        )

    # -- stimulus handlers -------------------------------------------------

    def post_utterance(
        self,
        session: Session,
        text: str,
        ctx: ElicitationContext | None = None,
    ) -> TurnReport:
        """Run the whole pipeline for one utterance, atomically per session."""
        ctx = ctx or ElicitationContext()
        with session.lock:
            frame = parse_case_frame(text)
            result = egc_evaluate(frame, self.fv_db, persona=session.persona, config=self.config)
            emotions = elicit_emotions(
                result, ctx, pending_prospect=session.pending_prospects > 0
            )
            if ctx.prospect is Prospect.PROSPECTIVE:
                session.pending_prospects += 1
            elif ctx.prospect in (Prospect.CONFIRMED, Prospect.DISCONFIRMED):
                session.pending_prospects -= 1
            groups = group_vector(emotions)
            return self._advance(session, "utterance", text, groups, emotions, result)

    def post_groups(self, session: Session, groups: GroupVector, label: str = "") -> TurnReport:
        """Feed a raw 9-group stimulus (trace evaluation, tests)."""
        with session.lock:
            return self._advance(session, "groups", label or "groups", groups, [], None)

    def idle(self, session: Session) -> TurnReport:
        """One stimulus-free tick: the state drifts, nothing else changes."""
        with session.lock:
            return self._advance(session, "idle", "idle", ZERO_GROUPS, [], None)

    def _advance(
        self,
        session: Session,
        kind: str,
        stimulus: str,
        groups: GroupVector,
        emotions: list[EmotionInstance],
        egc: EgcResult | None,
    ) -> TurnReport:
        state_before = session.machine.current
        if groups.is_zero:
            state_after = session.machine.idle_tick()
            chosen_group = None
        else:
            state_after, chosen_group = session.machine.apply_stimulus(groups)
            session.affect = update_user_profile(
                session.affect, feeling_vector_from_groups(groups)
            )
        report = TurnReport(
            kind=kind,
            stimulus=stimulus,
            state_before=state_before,
            state_after=state_after,
            chosen_group=chosen_group,
            groups=groups,
            emotions=emotions,
            egc=egc,
            recommendations=self._safe_top(session, 3),
            timestamp=time.time(),
        )
        session.history.append(report)
        return report

    # -- queries -----------------------------------------------------------

    def recommendations(
        self,
        session: Session,
        here: tuple[float, float] | None = None,
        radius_km: float | None = None,
        limit: int | None = None,
    ) -> list[RankedSpot]:
        ranked = rank_spots(
            session.affect,
            self.catalog,
            here=here,
            radius_km=radius_km,
            metric=self.config.distance_metric,
        )
        return ranked[:limit] if limit is not None else ranked

    def _safe_top(self, session: Session, limit: int) -> list[RankedSpot]:
        try:
            return self.recommendations(session, limit=limit)
        except EmptyCatalogError:
            return []

    # -- replay ------------------------------------------------------------

    def apply_event(self, session: Session, event: Mapping[str, Any]) -> TurnReport | None:
        """Re-run one recorded event-log record against a session."""
        if event.get("event") != "turn":
            return None
        kind = event["kind"]
        if kind == "utterance":
            return self.post_utterance(
                session, event["stimulus"], context_from_flags(event.get("context"))
            )
        if kind == "groups":
            return self.post_groups(
                session, GroupVector(tuple(event["groups"])), event.get("stimulus", "groups")
            )
        return self.idle(session)

    def rebuild_session(self, events: list[Mapping[str, Any]]) -> Session:
        """Reconstruct a session from its append-only event log."""
        create = next((e for e in events if e.get("event") == "create"), None)
        session = self.create_session(
            persona=create.get("persona") if create else None,
            session_id=create.get("session") if create else None,
        )
        for event in events:
            self.apply_event(session, event)
        return session

    def replay_states(self, events: list[Mapping[str, Any]]) -> list[MentalState]:
        """State sequence produced by replaying a log through a fresh session."""
        session = self.rebuild_session([e for e in events if e.get("event") == "create"])
        states: list[MentalState] = []
        for event in events:
            report = self.apply_event(session, event)
            if report is not None:
                states.append(report.state_after)
        return states


def create_event(session: Session) -> dict[str, Any]:
    return {
        "event": "create",
        "session": session.id,
        "persona": session.persona,
        "timestamp": time.time(),
    }


def turn_event(session: Session, report: TurnReport, ctx: ElicitationContext | None) -> dict[str, Any]:
    """Serialize one turn as a replayable event-log record."""
    record: dict[str, Any] = {
        "event": "turn",
        "session": session.id,
        "kind": report.kind,
        "stimulus": report.stimulus,
        "groups": list(report.groups.strengths),
        "state_after": report.state_after.value,
        "timestamp": report.timestamp,
    }
    if ctx is not None:
        record["context"] = context_to_flags(ctx)
    return record
