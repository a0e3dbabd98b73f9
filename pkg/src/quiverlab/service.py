"""Session API: create, inspect, mutate, undo, and decide companions.

All bodies are JSON; vertex labels are 1-based on the wire.  Responses are
rendered with canonical JSON (sorted keys) so that service state equals the
offline replay byte for byte.
"""

from __future__ import annotations

import os
import threading
from collections import defaultdict

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .companion import find_admissible_companion
from .errors import QuiverlabError, SignCoherenceLost
from .fixtures import PRESETS
from .io import canonical_json, parse_matrix_obj
from .session import Session, load_store, save_store

DEFAULT_PORT_ENV = "QUIVERLAB_PORT"


class CreateSessionBody(BaseModel):
    B: dict | None = None
    preset: str | None = None


class MutateBody(BaseModel):
    k: int


def _json_response(obj, status_code: int = 200) -> Response:
    return Response(content=canonical_json(obj) + "\n",
                    media_type="application/json", status_code=status_code)


def _error(status: int, message: str) -> Response:
    return _json_response({"error": message}, status_code=status)


def create_app(snapshot_path: str | None = None) -> FastAPI:
    app = FastAPI(title="quiverlab session service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"],
    )
    store: dict[str, Session] = {}
    if snapshot_path and os.path.exists(snapshot_path):
        store.update(load_store(snapshot_path))
    locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
    store_lock = threading.Lock()

    def persist() -> None:
        if snapshot_path:
            save_store(store, snapshot_path)

    @app.post("/api/session")
    def create_session(body: CreateSessionBody):
        if (body.B is None) == (body.preset is None):
            return _error(400, 'provide exactly one of "B" or "preset"')
        try:
            if body.preset is not None:
                name = body.preset.lower()
                if name not in PRESETS:
                    return _error(400, f"unknown preset {body.preset!r}")
                B0 = PRESETS[name]
            else:
                B0 = parse_matrix_obj(body.B)
        except QuiverlabError as err:
            return _error(400, str(err))
        session = Session.create(B0)
        with store_lock:
            store[session.session_id] = session
        persist()
        return _json_response({"id": session.session_id, "state": session.state()})

    def _with_session(session_id: str):
        with store_lock:
            session = store.get(session_id)
        return session

    @app.get("/api/session/{session_id}")
    def read_state(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, f"unknown session {session_id}")
        with locks[session_id]:
            return _json_response(session.state())

    @app.post("/api/session/{session_id}/mutate")
    async def mutate(session_id: str, request: Request):
        session = _with_session(session_id)
        if session is None:
            return _error(404, f"unknown session {session_id}")
        try:
            body = MutateBody(**(await request.json()))
        except Exception:
            return _error(400, 'body must be {"k": int}')
        k = body.k - 1
        if not 0 <= k < session.B0.n:
            return _error(400, f"vertex {body.k} out of range 1..{session.B0.n}")
        with locks[session_id]:
            try:
                session.mutate(k)
            except SignCoherenceLost as err:
                detail = {"error": "sign coherence lost", "message": str(err),
                          "index": (err.index + 1) if err.index is not None else None,
                          "vector": list(err.vector) if err.vector else None,
                          "history": session.state()["history"] + [body.k]}
                return _json_response(detail, status_code=409)
            state = session.state()
        persist()
        return _json_response(state)

    @app.post("/api/session/{session_id}/undo")
    def undo(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, f"unknown session {session_id}")
        with locks[session_id]:
            if session.current.parent is None:
                return _error(409, "already at the initial seed")
            session.undo()
            state = session.state()
        persist()
        return _json_response(state)

    @app.get("/api/session/{session_id}/find-companion")
    def find_companion(session_id: str):
        session = _with_session(session_id)
        if session is None:
            return _error(404, f"unknown session {session_id}")
        with locks[session_id]:
            search = find_admissible_companion(session.current.seed.B)
        if search.found:
            return _json_response({
                "found": True,
                "companion": {"A": [list(r) for r in search.companion.rows]},
            })
        return _json_response({
            "found": False,
            "certificate": {
                "cycles": [{"vertices": [v + 1 for v in c.vertices],
                            "oriented": c.oriented}
                           for c in search.certificate.cycles],
                "parities": list(search.certificate.parities()),
            },
        })

    @app.get("/api/presets")
    def list_presets():
        return _json_response({"presets": sorted(PRESETS)})

    return app


def serve(port: int | None = None, snapshot_path: str | None = None) -> None:
    import uvicorn

    if port is None:
        port = int(os.environ.get(DEFAULT_PORT_ENV, "8175"))
    uvicorn.run(create_app(snapshot_path), host="127.0.0.1", port=port)
