"""HTTP service exposing trials, forecast bundles, UI assets, and telemetry.

Endpoints (JSON bodies, UTF-8):

- ``GET  /api/trials``            -> {"trial_ids": [...]}
- ``GET  /api/trial/random``      -> {"trial_id": k}; ``?seed=N`` makes the
  draw deterministic
- ``GET  /api/trial/{id}/bundle`` -> canonical ForecastBundle JSON
- ``POST /api/telemetry``         -> appends one event, 400 names bad fields
- ``GET  /api/telemetry/summary`` -> aggregated telemetry
- ``GET  /``                      -> static UI assets when a UI directory is
  configured, else a minimal status page

Bundles are immutable, so each trial's JSON is rendered once and the exact
bytes are replayed for every request.
"""
from __future__ import annotations

import threading
from pathlib import Path

import numpy as np
from fastapi import FastAPI, Response
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .bundle import build_bundle, bundle_to_json
from .errors import FormatError, TrialNotFoundError
from .telemetry import TelemetryLog, summarize_telemetry
from .textgen import TemplateConfig
from .trials import TrialSet, select_trial

_FALLBACK_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>hedgecast</title></head>
<body><h1>hedgecast service</h1>
<p>No UI assets configured. API lives under <code>/api</code>.</p>
</body></html>
"""


def create_app(
    trial_set: TrialSet,
    templates: TemplateConfig | None = None,
    telemetry_path: str | Path = "telemetry.ndjson",
    ui_dir: str | Path | None = None,
    seed: int | None = None,
) -> FastAPI:
    app = FastAPI(title="hedgecast", docs_url=None, redoc_url=None)
    log = TelemetryLog(telemetry_path)
    fallback_rng = np.random.Generator(np.random.PCG64(seed))
    bundle_cache: dict[int, bytes] = {}
    cache_lock = threading.Lock()

    def bundle_bytes(trial_id: int) -> bytes:
        with cache_lock:
            if trial_id not in bundle_cache:
                trial = select_trial(trial_set, by_id=trial_id)
                bundle_cache[trial_id] = bundle_to_json(
                    build_bundle(trial, templates=templates)
                ).encode("utf-8")
            return bundle_cache[trial_id]

    @app.get("/api/trials")
    def list_trials():
        return {"trial_ids": trial_set.trial_ids()}

    @app.get("/api/trial/random")
    def random_trial(seed: int | None = None):
        if seed is not None:
            trial = select_trial(trial_set, random_with_seed=seed)
        else:
            trial = trial_set.trials[int(fallback_rng.integers(0, len(trial_set)))]
        return {"trial_id": trial.trial_id}

    @app.get("/api/trial/{trial_id}/bundle")
    def trial_bundle(trial_id: int):
        try:
            payload = bundle_bytes(trial_id)
        except TrialNotFoundError:
            return JSONResponse({"error": f"no trial with id {trial_id}"}, status_code=404)
        return Response(content=payload, media_type="application/json")

    @app.post("/api/telemetry")
    def post_telemetry(event: dict):
        try:
            return log.record(event)
        except FormatError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)

    @app.get("/api/telemetry/summary")
    def telemetry_summary():
        return summarize_telemetry(log.events())

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return _FALLBACK_PAGE

    return app
