"""HTTP facade: session-scoped JSON API over the affect pipeline.

Endpoints::

    GET  /health
    POST /sessions                      {persona?} -> new session (state quiet)
    POST /sessions/{id}/utterances      {text, context?} -> full turn report
    GET  /sessions/{id}/state
    GET  /sessions/{id}/recommendations?lat=&lon=&radius_km=&limit=
    GET  /spots
    GET  /admin/fv/{term}?persona=
    PUT  /admin/fv/{term}               {value, layer?}

Requests for one session are serialized by its lock; distinct sessions run
concurrently.  With a configured ``session_dir`` every session is persisted as
an append-only JSONL event log and rebuilt by replay on startup.
"""

from __future__ import annotations

import json
import shutil
import threading
from pathlib import Path

from fastapi import Depends, FastAPI, Header, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .assets import FV_LEXICON, data_path
from .case_frames import (
    CaseFrameError,
    DuplicateSlotError,
    NotationSyntaxError,
    UnknownEmotionTagError,
    UnknownSignatureError,
)
from .config import EngineConfig
from .elicitation import ContextError
from .favorites import DEFAULT_LAYER, FavoriteRangeError, FvStore, load_fv_file
from .mental_states import ZeroStimulusError
from .recommend import EmptyCatalogError, FEELING_ORDER
from .session import (
    Engine,
    Session,
    UnknownSessionError,
    context_from_flags,
    create_event,
    ranked_spot_to_dict,
    turn_event,
)

class UnknownAdminTokenError(PermissionError):
    """Admin endpoint called without the configured X-Admin-Token."""


_ERROR_MAP: list[tuple[type[Exception], str, int]] = [
    (UnknownAdminTokenError, "admin_token_required", 401),
    (NotationSyntaxError, "syntax_error", 422),
    (DuplicateSlotError, "duplicate_slot", 422),
    (UnknownSignatureError, "unknown_signature", 422),
    (UnknownEmotionTagError, "unknown_emotion_tag", 422),
    (CaseFrameError, "case_frame_error", 422),
    (ContextError, "context_error", 422),
    (FavoriteRangeError, "range_error", 422),
    (ZeroStimulusError, "zero_stimulus", 422),
    (EmptyCatalogError, "empty_catalog", 404),
    (UnknownSessionError, "unknown_session", 404),
    (ValueError, "validation_error", 422),
]


class SessionPayload(BaseModel):
    persona: str | None = None


class UtterancePayload(BaseModel):
    text: str = Field(min_length=1)
    context: dict[str, str] | None = None


class FvPayload(BaseModel):
    value: float
    layer: str = Field(default=DEFAULT_LAYER, min_length=1)


class SessionService:
    """Session registry plus optional event-log persistence."""

    def __init__(self, engine: Engine, session_dir: Path | None = None) -> None:
        self.engine = engine
        self.session_dir = Path(session_dir) if session_dir else None
        self.sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        if self.session_dir is not None:
            self.session_dir.mkdir(parents=True, exist_ok=True)
            self._restore()

    def _restore(self) -> None:
        assert self.session_dir is not None
        for log_path in sorted(self.session_dir.glob("*.jsonl")):
            events = [
                json.loads(line)
                for line in log_path.read_text(encoding="utf-8").splitlines()
                if line.strip()
            ]
            session = self.engine.rebuild_session(events)
            self.sessions[session.id] = session

    def _append(self, session_id: str, record: dict) -> None:
        if self.session_dir is None:
            return
        with open(self.session_dir / f"{session_id}.jsonl", "a", encoding="utf-8") as handle:
            handle.write(json.dumps(record) + "\n")

    def create(self, persona: str | None) -> Session:
        session = self.engine.create_session(persona=persona)
        with self._registry_lock:
            self.sessions[session.id] = session
        self._append(session.id, create_event(session))
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise UnknownSessionError(f"no session {session_id!r}") from None

    def utterance(self, session_id: str, text: str, flags: dict[str, str] | None):
        session = self.get(session_id)
        ctx = context_from_flags(flags)
        report = self.engine.post_utterance(session, text, ctx)
        self._append(session.id, turn_event(session, report, ctx))
        return session, report


def create_app(config: EngineConfig | None = None, engine: Engine | None = None) -> FastAPI:
    """Build the application; separate instances share nothing."""
    config = config or EngineConfig()
    engine = engine or _engine_with_store(config)
    service = SessionService(engine, session_dir=config.session_dir)

    app = FastAPI(title="mindtour", version="0.1.0")
    app.state.service = service
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    for exc_type, code, status in _ERROR_MAP:
        app.add_exception_handler(exc_type, _handler_for(code, status))

    def require_admin(x_admin_token: str | None = Header(default=None)) -> None:
        if config.admin_token is not None and x_admin_token != config.admin_token:
            raise UnknownAdminTokenError("missing or wrong X-Admin-Token header")

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "sessions": len(service.sessions)}

    @app.post("/sessions", status_code=201)
    def create_session(payload: SessionPayload | None = None) -> dict:
        persona = payload.persona if payload else None
        session = service.create(persona)
        return {"session_id": session.id, "persona": session.persona, "state": session.state.value}

    @app.post("/sessions/{session_id}/utterances")
    def post_utterance(session_id: str, payload: UtterancePayload) -> dict:
        session, report = service.utterance(session_id, payload.text, payload.context)
        body = report.to_dict()
        body["session_id"] = session.id
        return body

    @app.get("/sessions/{session_id}/state")
    def get_state(session_id: str) -> dict:
        session = service.get(session_id)
        return {
            "session_id": session.id,
            "state": session.state.value,
            "affect": dict(zip(FEELING_ORDER, session.affect.current.as_tuple())),
            "turns": len(session.history),
            "pending_prospects": session.pending_prospects,
        }

    @app.get("/sessions/{session_id}/recommendations")
    def get_recommendations(
        session_id: str,
        lat: float | None = Query(default=None),
        lon: float | None = Query(default=None),
        radius_km: float | None = Query(default=None),
        limit: int = Query(default=10, ge=1),
    ) -> dict:
        session = service.get(session_id)
        if (lat is None) != (lon is None):
            raise ValueError("lat and lon must be given together")
        here = (lat, lon) if lat is not None and lon is not None else None
        ranked = service.engine.recommendations(session, here=here, radius_km=radius_km, limit=limit)
        return {"session_id": session.id, "spots": [ranked_spot_to_dict(r) for r in ranked]}

    @app.get("/spots")
    def get_spots() -> dict:
        return {
            "spots": [
                {
                    "name": spot.name,
                    "latitude": spot.latitude,
                    "longitude": spot.longitude,
                    "description": spot.description,
                    "profile": dict(zip(FEELING_ORDER, spot.profile.as_tuple())),
                }
                for spot in service.engine.catalog
            ]
        }

    @app.get("/admin/fv/{term}")
    def get_fv(term: str, persona: str | None = None, _: None = Depends(require_admin)) -> dict:
        value, provenance = service.engine.fv_db.lookup(term, persona)
        return {"term": term, "value": value, "provenance": provenance.value}

    @app.put("/admin/fv/{term}")
    def put_fv(term: str, payload: FvPayload, _: None = Depends(require_admin)) -> dict:
        store = getattr(engine, "fv_store", None)
        if store is not None:
            store.upsert(term, payload.value, payload.layer)
            persisted = True
        else:
            service.engine.fv_db.upsert(term, payload.value, payload.layer)
            persisted = False
        return {"term": term, "value": payload.value, "layer": payload.layer, "persisted": persisted}

    return app


def _handler_for(code: str, status: int):
    def handler(request, exc: Exception) -> JSONResponse:
        return JSONResponse(
            status_code=status,
            content={"error": {"code": code, "message": str(exc)}},
        )

    return handler


def _engine_with_store(config: EngineConfig) -> Engine:
    """Engine whose favorite values persist when a data_dir is configured."""
    if config.data_dir is not None:
        lexicon = Path(config.data_dir) / FV_LEXICON
        if not lexicon.exists():
            lexicon.parent.mkdir(parents=True, exist_ok=True)
            shutil.copy(data_path(FV_LEXICON), lexicon)
        store = FvStore(lexicon)
        engine = Engine(config, fv_db=store.db)
        engine.fv_store = store  # type: ignore[attr-defined]
        return engine
    return Engine(config, fv_db=load_fv_file(data_path(FV_LEXICON)))
