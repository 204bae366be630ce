"""HTTP facade for the interactive mining workflow.

Loads one transaction database at startup and serves the analyst loop:
dataset stats, window previews, mining job submission, and result
retrieval. Previews are pure reads on the immutable database and run
concurrently; mining jobs execute one at a time on a single worker thread
fed by a bounded queue. The browser console is served from a static bundle
at the root path when one is available.
"""

from __future__ import annotations

import io
import queue
import threading
import uuid
from contextlib import asynccontextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .core import format_pattern
from .gsp import mine_gsp
from .ingest import (
    SequenceDatabase,
    TimeWindow,
    TransactionDb,
    derive_sequence_db,
    load_transactions,
    preview_sample,
)
from .results import MiningConfig, MiningResult
from .rsp import mine_rsp

JOB_QUEUE_DEPTH = 4

ALGORITHMS: dict[str, Callable[[SequenceDatabase, MiningConfig], MiningResult]] = {
    "rsp": mine_rsp,
    "gsp": mine_gsp,
}

PLACEHOLDER_PAGE = """<!doctype html>
<html><head><title>seqmine</title></head>
<body><h1>seqmine service</h1>
<p>No console bundle is installed. The JSON API lives under <code>/api</code>:
stats, preview, mine, jobs, results.</p></body></html>
"""


@dataclass
class MiningJob:
    id: str
    window: TimeWindow
    config: MiningConfig
    algorithm: str
    state: str = "pending"  # pending -> running -> done | failed
    result: Optional[MiningResult] = None
    error: Optional[str] = None

    def public_view(self) -> dict:
        view = {
            "id": self.id,
            "state": self.state,
            "algorithm": self.algorithm,
            "window": {
                "start": self.window.start.isoformat(),
                "end": self.window.end.isoformat(),
            },
            "min_support": self.config.min_support,
            "max_pattern_length": self.config.max_pattern_length,
        }
        if self.error is not None:
            view["error"] = self.error
        return view


@dataclass
class ServiceState:
    db: TransactionDb
    jobs: dict[str, MiningJob] = field(default_factory=dict)
    job_queue: "queue.Queue[MiningJob | None]" = field(
        default_factory=lambda: queue.Queue(maxsize=JOB_QUEUE_DEPTH)
    )
    lock: threading.Lock = field(default_factory=threading.Lock)
    worker: Optional[threading.Thread] = None

    def start_worker(self) -> None:
        self.worker = threading.Thread(target=self._work, name="seqmine-miner", daemon=True)
        self.worker.start()

    def stop_worker(self) -> None:
        if self.worker is None:
            return
        self.job_queue.put(None)
        self.worker.join(timeout=10)

    def _work(self) -> None:
        while True:
            job = self.job_queue.get()
            if job is None:
                return
            with self.lock:
                job.state = "running"
            try:
                derived = derive_sequence_db(self.db, job.window)
                result = ALGORITHMS[job.algorithm](derived, job.config)
            except Exception as exc:  # surfaced to the client via job state
                with self.lock:
                    job.error = str(exc)
                    job.state = "failed"
            else:
                with self.lock:
                    job.result = result
                    job.state = "done"


class MineRequest(BaseModel):
    start: str
    end: str
    min_support: int | float
    max_len: Optional[int] = None
    algorithm: str = "rsp"


def _parse_window(start: str, end: str) -> TimeWindow:
    try:
        return TimeWindow.parse(start, end)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def create_app(
    data_path: str | Path,
    static_dir: str | Path | None = None,
    *,
    preloaded_db: TransactionDb | None = None,
) -> FastAPI:
    """Build the application around one dataset.

    The transaction database loads once at startup (or is injected for
    tests); the mining worker starts with the app and stops with it.
    """
    state: dict[str, ServiceState] = {}

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        db = preloaded_db if preloaded_db is not None else load_transactions(data_path)
        state["svc"] = ServiceState(db=db)
        state["svc"].start_worker()
        yield
        state["svc"].stop_worker()

    app = FastAPI(title="seqmine", lifespan=lifespan)

    def svc() -> ServiceState:
        return state["svc"]

    @app.get("/api/stats")
    def stats() -> dict:
        db = svc().db
        span = db.time_span()
        return {
            "objects": len(db.object_universe),
            "records": len(db),
            "items": len(db.item_universe),
            "time_span": [span[0].isoformat(), span[1].isoformat()] if span else None,
        }

    @app.get("/api/preview")
    def preview(start: str, end: str, k: int = 10) -> dict:
        if k < 1:
            raise HTTPException(status_code=400, detail=f"k must be >= 1, got {k}")
        window = _parse_window(start, end)
        report = preview_sample(svc().db, window, k)
        return {
            "window": {"start": window.start.isoformat(), "end": window.end.isoformat()},
            "interval_days": report.interval_days,
            "sample": [
                {"object_id": obj, "sequence": format_pattern(seq), "length": len(seq)}
                for obj, seq in report.sample
            ],
            "stats": {
                "object_count": report.object_count,
                "min_length": report.min_length,
                "avg_length": report.avg_length,
                "max_length": report.max_length,
                "distinct_items": report.distinct_items,
                "interval_days": report.interval_days,
            },
        }

    @app.post("/api/mine", status_code=202)
    def submit_mine(req: MineRequest) -> dict:
        window = _parse_window(req.start, req.end)
        if req.algorithm not in ALGORITHMS:
            raise HTTPException(
                status_code=400,
                detail=f"unknown algorithm {req.algorithm!r}; expected one of {sorted(ALGORITHMS)}",
            )
        try:
            config = MiningConfig(min_support=req.min_support, max_pattern_length=req.max_len)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

        job = MiningJob(
            id=uuid.uuid4().hex[:12], window=window, config=config, algorithm=req.algorithm
        )
        s = svc()
        try:
            s.job_queue.put_nowait(job)
        except queue.Full:
            raise HTTPException(status_code=429, detail="mining queue is full") from None
        with s.lock:
            s.jobs[job.id] = job
        return {"job_id": job.id}

    def _get_job(job_id: str) -> MiningJob:
        job = svc().jobs.get(job_id)
        if job is None:
            raise HTTPException(status_code=404, detail=f"unknown job {job_id!r}")
        return job

    @app.get("/api/jobs/{job_id}")
    def job_status(job_id: str) -> dict:
        with svc().lock:
            return _get_job(job_id).public_view()

    def _finished_result(job_id: str) -> MiningResult:
        s = svc()
        with s.lock:
            job = _get_job(job_id)
            if job.state == "failed":
                raise HTTPException(status_code=409, detail=f"job failed: {job.error}")
            if job.state != "done" or job.result is None:
                raise HTTPException(status_code=409, detail=f"job is {job.state}, not done")
            return job.result

    @app.get("/api/results/{job_id}")
    def job_result(job_id: str) -> dict:
        result = _finished_result(job_id)
        with svc().lock:
            algorithm = _get_job(job_id).algorithm
        payload = result.to_json_dict()
        payload["job_id"] = job_id
        payload["algorithm"] = algorithm
        return payload

    @app.get("/api/results/{job_id}/csv")
    def job_result_csv(job_id: str) -> Response:
        result = _finished_result(job_id)
        buf = io.StringIO()
        result.write_csv(buf)
        return Response(
            content=buf.getvalue(),
            media_type="text/csv",
            headers={"Content-Disposition": f"attachment; filename=result-{job_id}.csv"},
        )

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="console")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return PLACEHOLDER_PAGE

    return app


def serve(
    data_path: str | Path,
    bind_address: str = "127.0.0.1:8080",
    static_dir: str | Path | None = None,
) -> None:
    """Blocking entrypoint: load the dataset and run the HTTP server."""
    import uvicorn

    host, _, port_text = bind_address.partition(":")
    port = int(port_text) if port_text else 8080
    app = create_app(data_path, static_dir=static_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=port)
