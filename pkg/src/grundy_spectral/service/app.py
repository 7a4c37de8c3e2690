"""FastAPI application exposing the analysis pipeline.

Domain failures (unparseable graphs, exceeded caps) map to 400; unknown
verify suites map to 422 since they are caller usage errors.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, HTTPException, Query

from ..atoms import enumerate_atoms
from ..bounds import CSV_HEADER as REPORT_CSV_HEADER
from ..bounds import bound_report
from ..errors import GrundySpectralError
from ..experiments import Family, SweepConfig, rows_to_csv, run_sweep
from ..graphs import parse_edge_list
from ..spectral import tk_lambda_table
from ..verify import SUITES, run_suite
from .models import (
    AnalyzeRequest,
    AnalyzeResponse,
    AtomsRequest,
    AtomsResponse,
    CheckJSON,
    HealthResponse,
    SweepRequest,
    SweepResponse,
    TkResponse,
    TkRow,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(title="grundy-spectral", version="0.1.0")

TK_MAX = 10**6


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    try:
        g = parse_edge_list(req.edge_list)
        report = bound_report(g, req.exact_budget, req.graph_id)
    except GrundySpectralError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    data = report.to_json()
    data["csv_header"] = REPORT_CSV_HEADER
    data["csv_row"] = report.to_csv_row()
    return AnalyzeResponse(**data)


@app.post("/atoms", response_model=AtomsResponse)
def atoms(req: AtomsRequest) -> AtomsResponse:
    try:
        found = [a.to_json() for a in enumerate_atoms(req.k, req.n_max)]
    except GrundySpectralError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return AtomsResponse(
        k=req.k, n_max=req.n_max, count=len(found), atoms=found
    )


@app.get("/tk", response_model=TkResponse)
def tk(k_max: int = Query(ge=1, le=TK_MAX)) -> TkResponse:
    table = tk_lambda_table(k_max)
    rows = []
    for k in range(1, k_max + 1):
        upper = math.sqrt(2.0 * (k - 1))
        f_k = float(table[k - 1])
        rows.append(
            TkRow(k=k, f_k=f_k, sqrt_2k_minus_2=upper, gap=upper - f_k)
        )
    return TkResponse(rows=rows)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    if req.suite not in SUITES:
        raise HTTPException(
            status_code=422,
            detail=f"unknown suite {req.suite!r}; known: {', '.join(sorted(SUITES))}",
        )
    checks = run_suite(req.suite)
    return VerifyResponse(
        suite=req.suite,
        passed=all(c.passed for c in checks),
        checks=[
            CheckJSON(name=c.name, passed=c.passed, detail=c.detail)
            for c in checks
        ],
    )


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    try:
        family = Family(req.family)
    except ValueError:
        raise HTTPException(
            status_code=422,
            detail=f"unknown family {req.family!r}; known: "
            + ", ".join(f.value for f in Family),
        )
    try:
        config = SweepConfig(
            family=family,
            n_values=tuple(req.n_values),
            trials=req.trials,
            rng_seed=req.rng_seed,
            c=req.c,
            p_exponent=req.p_exponent,
            orderings=req.orderings,
        )
        result = run_sweep(config, workers=req.workers)
    except GrundySpectralError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return SweepResponse(
        csv=rows_to_csv(result.rows),
        truncated=result.truncated,
        num_rows=len(result.rows),
    )
