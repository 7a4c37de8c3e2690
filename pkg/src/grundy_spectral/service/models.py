"""Request/response schemas for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    edge_list: str = Field(description="graph in edge-list text format")
    graph_id: str = "graph"
    exact_budget: int = Field(default=10**8, ge=1)


class AnalyzeResponse(BaseModel):
    graph_id: str
    n: int
    num_edges: int
    max_degree: int
    degeneracy: int
    lambda1: float
    mu1: float | None
    exact_grundy: int | None
    exact_chromatic: int | None
    bounds: dict[str, int | float | None]
    notes: dict[str, str]
    csv_header: str
    csv_row: str


class AtomsRequest(BaseModel):
    # caps are enforced by the enumeration itself so that exceeding them
    # surfaces as a domain error, not a schema violation
    k: int
    n_max: int


class AtomJSON(BaseModel):
    n: int
    edges: list[list[int]]
    layers: list[list[int]]
    seed: int


class AtomsResponse(BaseModel):
    k: int
    n_max: int
    count: int
    atoms: list[AtomJSON]


class TkRow(BaseModel):
    k: int
    f_k: float
    sqrt_2k_minus_2: float
    gap: float


class TkResponse(BaseModel):
    rows: list[TkRow]


class VerifyRequest(BaseModel):
    suite: str


class CheckJSON(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckJSON]


class SweepRequest(BaseModel):
    family: str
    n_values: list[int]
    trials: int = Field(ge=1)
    rng_seed: int
    c: float | None = None
    p_exponent: float | None = None
    orderings: int = Field(default=32, ge=1)
    workers: int = Field(default=1, ge=1)


class SweepResponse(BaseModel):
    csv: str
    truncated: bool
    num_rows: int


class HealthResponse(BaseModel):
    status: str
