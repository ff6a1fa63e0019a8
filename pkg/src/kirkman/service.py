"""FastAPI service exposing construction, verification, planning and the
oracle cross-check.

Run with: uvicorn kirkman.service:app
"""

from __future__ import annotations

import random

from fastapi import FastAPI, HTTPException

from . import io, oracle
from .core import ResolvableDesign, design_stats
from .errors import KirkmanError
from .factorization import factorize_even
from .kts import build_kts
from .kqs import build_kqs
from .placement import ChunkCatalog, export_plan, plan_from_design
from .schemas import (
    DesignDocument,
    FactorizationDocument,
    FactorizeRequest,
    GenerateRequest,
    OracleRequest,
    OracleResponse,
    PlanDocument,
    PlanRequest,
    StatsResponse,
    VerifyResponse,
)
from .verify import subset_tally, verify_design

app = FastAPI(
    title="kirkman",
    description="Kirkman triple/quadruple systems with maximum min-sum, "
    "1-factorizations, and popularity-aware placement planning.",
)


def _design_from_doc(doc: DesignDocument) -> ResolvableDesign:
    try:
        return io.design_from_dict(doc.model_dump())
    except KirkmanError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _design_doc(d: ResolvableDesign) -> DesignDocument:
    return DesignDocument(**io.design_to_dict(d))


@app.post("/generate/kts", response_model=DesignDocument)
def generate_kts(req: GenerateRequest) -> DesignDocument:
    try:
        return _design_doc(build_kts(req.exponent))
    except KirkmanError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/generate/kqs", response_model=DesignDocument)
def generate_kqs(req: GenerateRequest) -> DesignDocument:
    try:
        return _design_doc(build_kqs(req.exponent))
    except KirkmanError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.post("/factorize", response_model=FactorizationDocument)
def factorize(req: FactorizeRequest) -> FactorizationDocument:
    try:
        doc = io.factorization_to_dict(factorize_even(req.order))
    except KirkmanError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return FactorizationDocument(**doc)


@app.post("/verify", response_model=VerifyResponse)
def verify(doc: DesignDocument) -> VerifyResponse:
    report = verify_design(_design_from_doc(doc))
    return VerifyResponse(**report.to_dict())


@app.post("/stats", response_model=StatsResponse)
def stats(doc: DesignDocument) -> StatsResponse:
    report = design_stats(_design_from_doc(doc))
    return StatsResponse(**report.to_dict())


@app.post("/plan", response_model=PlanDocument)
def plan(req: PlanRequest) -> PlanDocument:
    design = _design_from_doc(req.design)
    catalog = ChunkCatalog(tuple((e.id, e.score) for e in req.catalog))
    try:
        rendered = export_plan(plan_from_design(design, catalog), req.format)
    except KirkmanError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    return PlanDocument(rendered=rendered, format=req.format)


def oracle_cross_check(d: ResolvableDesign, samples: int, seed: int) -> OracleResponse:
    """Compare naive-scan subset counts against the verifier tally on random
    t-subsets; also check every count is exactly 1 for a valid design."""
    rng = random.Random(seed)
    blocks = d.all_blocks()
    disagreements = []
    agreements = 0
    for _ in range(samples):
        subset = tuple(sorted(rng.sample(range(d.n), d.t)))
        naive = oracle.oracle_subset_count(blocks, subset)
        tallied = subset_tally(d, subset)
        if naive == tallied:
            agreements += 1
        else:
            disagreements.append({"subset": list(subset), "oracle": naive, "verifier": tallied})
    return OracleResponse(
        samples=samples, agreements=agreements, disagreements=disagreements
    )


@app.post("/oracle", response_model=OracleResponse)
def oracle_check(req: OracleRequest) -> OracleResponse:
    design = _design_from_doc(req.design)
    return oracle_cross_check(design, req.samples, req.seed)
