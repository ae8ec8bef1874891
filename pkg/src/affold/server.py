"""Stateless HTTP JSON service for the explorer UI.

All endpoints are pure functions of their request bodies (safe to retry):

    POST /v1/quiver/mutate        {"doc": ..., "k": 1-based vertex}
    POST /v1/quiver/orbit-mutate  {"doc": ..., "orbit": 1-based orbit index}
    POST /v1/quiver/check         {"doc": ...} -> {invariant, admissible, witness}
    POST /v1/quiver/fold          {"doc": ...} -> folded document
    POST /v1/recognize            {"doc": ...} -> {"type": "...", "known": bool}
    GET  /v1/catalog              -> catalog listing with layouts and actions

Domain errors map to HTTP 422 with a machine-readable ``code``; malformed
JSON is a 400.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import catalog
from .document import parse_document, serialize_document
from .errors import AffoldError, FormatError
from .folding import fold, g_admissible, globally_foldable
from .matrix import mutate
from .mutclass import enumerate_class
from .seeds import initial_seed  # noqa: F401  (re-exported for embedders)

CATALOG_TYPES = [
    "A~1", "A~{1,2}", "A~{2,2}", "A~{1,3}", "A~{3,3}", "A~{4,4}",
    "D~4", "D~5", "D~6", "D~7", "D~8",
    "E~6", "E~7", "E~8",
    "B~3", "C~2", "F~4", "G~2",
    "A2(2)", "A4(2)", "A5(2)", "D3(2)", "E6(2)", "D4(3)",
]


def create_app() -> FastAPI:
    app = FastAPI(title="affold", version="1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(AffoldError)
    async def _domain_error(_request: Request, exc: AffoldError):
        return JSONResponse(
            status_code=422, content={"code": exc.code, "message": str(exc)}
        )

    def _doc(payload: dict):
        if "doc" not in payload:
            raise FormatError("request body needs a 'doc' field")
        return parse_document(payload["doc"])

    @app.post("/v1/quiver/mutate")
    async def quiver_mutate(payload: dict):
        m, action, names = _doc(payload)
        k = payload.get("k")
        if not isinstance(k, int):
            raise FormatError("field 'k' must be a 1-based vertex index")
        out = mutate(m, k - 1)
        return {"doc": serialize_document(out, action, names)}

    @app.post("/v1/quiver/orbit-mutate")
    async def quiver_orbit_mutate(payload: dict):
        from .folding import orbit_mutate

        m, action, names = _doc(payload)
        if action is None:
            raise FormatError("document carries no group action")
        idx = payload.get("orbit")
        if not isinstance(idx, int) or not 1 <= idx <= len(action.orbits):
            raise FormatError("field 'orbit' must be a 1-based orbit index")
        out = orbit_mutate(m, action, action.orbits[idx - 1])
        return {"doc": serialize_document(out, action, names)}

    @app.post("/v1/quiver/check")
    async def quiver_check(payload: dict):
        m, action, _ = _doc(payload)
        if action is None:
            raise FormatError("document carries no group action")
        report = g_admissible(m, action)
        witness = None
        if report.witness is not None and report.witness_kind != "not_invariant":
            witness = [v + 1 for v in report.witness]
        return {
            "invariant": report.invariant,
            "admissible": report.admissible,
            "witness": witness,
            "witness_kind": report.witness_kind,
            "orbits": [[v + 1 for v in orb] for orb in action.orbits],
        }

    @app.post("/v1/quiver/fold")
    async def quiver_fold(payload: dict):
        m, action, _ = _doc(payload)
        if action is None:
            raise FormatError("document carries no group action")
        folded = fold(m, action)
        return {
            "doc": serialize_document(folded.matrix),
            "orbits": [[v + 1 for v in orb] for orb in folded.orbits],
        }

    @app.post("/v1/quiver/foldable")
    async def quiver_foldable(payload: dict):
        m, action, _ = _doc(payload)
        if action is None:
            raise FormatError("document carries no group action")
        verdict = globally_foldable(m, action, budget=payload.get("budget", 100_000))
        return {
            "status": verdict.status,
            "witness": list(verdict.witness or []) or None,
            "reachable": verdict.reachable,
        }

    @app.post("/v1/recognize")
    async def recognize(payload: dict):
        m, _, _ = _doc(payload)
        t = catalog.recognize_type(m, budget=payload.get("budget", 100_000))
        return {"type": None if t is None else str(t), "known": t is not None}

    @app.post("/v1/enumerate")
    async def enumerate_endpoint(payload: dict):
        m, _, _ = _doc(payload)
        cls = enumerate_class(m, budget=payload.get("budget", 100_000))
        return {"size": len(cls), "closed": cls.closed}

    @app.get("/v1/catalog")
    async def catalog_listing():
        out = []
        for name in CATALOG_TYPES:
            t = catalog.parse_type(name)
            m = catalog.diagram(t)
            actions = [
                {"group": g, "target": y,
                 "generators": [[v + 1 for v in gen] for gen in a.generators],
                 "orbits": [[v + 1 for v in orb] for orb in a.orbits]}
                for g, y, a in catalog.actions_for(t)
            ]
            out.append(
                {
                    "type": str(t),
                    "n": m.n,
                    "doc": serialize_document(m),
                    "layout": catalog.layout(t),
                    "actions": actions,
                }
            )
        return {"types": out}

    return app


def run(port: int = 8617, host: str = "127.0.0.1") -> None:
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
