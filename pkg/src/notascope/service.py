"""Read-only HTTP API over a loaded gallery.

All numeric values come from the same engine the CLI uses, so API
responses and CLI exports can never disagree. Responses are JSON except
/img; errors use a uniform ``{"error": {"code", "message"}}`` envelope.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import FileResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .analysis import BOOTSTRAP_METRICS, correlate
from .diffs import token_diff
from .engine import Engine
from .errors import NotascopeError, UnknownExample, UnknownNotation
from .metrics import METRIC_IDS
from .tokenizer import tokenize


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": {"code": code, "message": message}})


def create_app(engine: Engine, static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="notascope", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    gallery = engine.gallery
    cache: dict[tuple, object] = {}
    cache_lock = threading.Lock()

    def cached(key: tuple, compute):
        with cache_lock:
            if key in cache:
                return cache[key]
        value = compute()
        with cache_lock:
            # first computation wins; duplicates are identical by determinism
            return cache.setdefault(key, value)

    def check_notation(notation_id: str) -> None:
        if notation_id not in gallery.notation_ids:
            raise UnknownNotation(notation_id)

    def check_spec(notation_id: str, example_id: str) -> None:
        check_notation(notation_id)
        if example_id not in gallery.example_ids:
            raise UnknownExample(example_id)

    @app.exception_handler(UnknownNotation)
    async def unknown_notation(_req: Request, exc: UnknownNotation):
        return _error(404, "unknown_notation", str(exc))

    @app.exception_handler(UnknownExample)
    async def unknown_example(_req: Request, exc: UnknownExample):
        return _error(404, "unknown_example", str(exc))

    @app.exception_handler(NotascopeError)
    async def domain_error(_req: Request, exc: NotascopeError):
        return _error(400, type(exc).__name__, str(exc))

    @app.get("/api/manifest")
    def manifest():
        return engine.manifest().to_jsonable()

    @app.get("/api/notations")
    def notations():
        out = []
        for nid in gallery.notation_ids:
            s = engine.summary(nid)
            out.append(
                {
                    "id": nid,
                    "language_id": s.language_id,
                    "vocabulary_size": s.vocabulary_size,
                    "median_spec_length": s.median_spec_length,
                    "sprawl": s.sprawl,
                }
            )
        return out

    @app.get("/api/examples")
    def examples():
        return [
            {"id": e, "has_image": e in gallery.images}
            for e in gallery.example_ids
        ]

    @app.get("/api/specs/{notation_id}/{example_id}")
    def spec(notation_id: str, example_id: str):
        check_spec(notation_id, example_id)
        s = gallery.spec(notation_id, example_id)
        cfg = gallery.notation(notation_id)
        stream = tokenize(s.normalized_text, cfg.tokenizer_id, notation_id, example_id)
        return {
            "notation": notation_id,
            "example": example_id,
            "raw": s.raw_text,
            "normalized": s.normalized_text,
            "byte_length": s.byte_length,
            "tokens": [
                {"kind": t.kind, "lexeme": t.lexeme, "span": [t.start, t.end]}
                for t in stream.tokens
            ],
        }

    @app.get("/api/distances/{notation_id}")
    def distances(notation_id: str, metric: str = "cd"):
        check_notation(notation_id)
        if metric not in METRIC_IDS:
            return _error(400, "unknown_metric", f"metric must be one of {METRIC_IDS}")
        return cached(("distances", notation_id, metric), lambda: engine.matrix(notation_id, metric).to_jsonable())

    @app.get("/api/remoteness")
    def remoteness_join(a: str, b: str, metric: str = "cd"):
        check_notation(a)
        check_notation(b)
        if metric not in METRIC_IDS:
            return _error(400, "unknown_metric", f"metric must be one of {METRIC_IDS}")

        def compute():
            rows = engine.join(a, b, metric)
            return [
                {
                    "example_id": r.example_id,
                    "remoteness_a": r.remoteness_a,
                    "remoteness_b": r.remoteness_b,
                    "length_a": r.length_a,
                    "length_b": r.length_b,
                }
                for r in rows
            ]

        return cached(("remoteness", a, b, metric), compute)

    @app.get("/api/embedding/{notation_id}")
    def embedding(notation_id: str, metric: str = "cd"):
        check_notation(notation_id)
        if metric not in METRIC_IDS:
            return _error(400, "unknown_metric", f"metric must be one of {METRIC_IDS}")
        return cached(("embedding", notation_id, metric), lambda: engine.embedding(notation_id, metric).to_jsonable())

    @app.get("/api/dendrogram/{notation_id}")
    def dendrogram(notation_id: str, metric: str = "cd"):
        check_notation(notation_id)
        if metric not in METRIC_IDS:
            return _error(400, "unknown_metric", f"metric must be one of {METRIC_IDS}")
        return cached(("dendrogram", notation_id, metric), lambda: engine.dendrogram(notation_id, metric).to_jsonable())

    @app.get("/api/mst/{notation_id}")
    def spanning_tree(notation_id: str, metric: str = "cd"):
        check_notation(notation_id)
        if metric not in METRIC_IDS:
            return _error(400, "unknown_metric", f"metric must be one of {METRIC_IDS}")
        return cached(("mst", notation_id, metric), lambda: engine.spanning_tree(notation_id, metric).to_jsonable())

    @app.get("/api/bootstrap/{notation_id}")
    def bootstrap_endpoint(notation_id: str, metric: str = "median_spec_length", samples: int = 1000, seed: int = 0):
        check_notation(notation_id)
        if metric not in BOOTSTRAP_METRICS:
            return _error(400, "unknown_metric", f"metric must be one of {BOOTSTRAP_METRICS}")
        if samples < 1 or samples > 100_000:
            return _error(400, "bad_params", "samples must be between 1 and 100000")
        return cached(
            ("bootstrap", notation_id, metric, samples, seed),
            lambda: engine.bootstrap(notation_id, metric, samples, seed).to_jsonable(),
        )

    @app.get("/api/correlation/{notation_id}")
    def correlation(notation_id: str, permutations: int = 999, seed: int = 0):
        check_notation(notation_id)

        def compute():
            report = correlate(
                engine.matrix(notation_id, "token_ld"),
                engine.matrix(notation_id, "cd"),
                permutations=permutations,
                seed=seed,
            )
            return report.to_jsonable()

        return cached(("correlation", notation_id, permutations, seed), compute)

    @app.get("/api/diff/{na}/{ea}/{nb}/{eb}")
    def diff(na: str, ea: str, nb: str, eb: str):
        check_spec(na, ea)
        check_spec(nb, eb)

        def compute():
            streams = []
            for nid, eid in ((na, ea), (nb, eb)):
                cfg = gallery.notation(nid)
                s = gallery.spec(nid, eid)
                streams.append(tokenize(s.normalized_text, cfg.tokenizer_id, nid, eid))
            return token_diff(streams[0], streams[1]).to_jsonable()

        return cached(("diff", na, ea, nb, eb), compute)

    @app.get("/img/{example_id}")
    def image(example_id: str):
        path = gallery.images.get(example_id)
        if path is None or not path.is_file():
            return _error(404, "no_image", f"no image asset for example {example_id!r}")
        media = "image/svg+xml" if path.suffix == ".svg" else "image/png"
        return FileResponse(path, media_type=media)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
