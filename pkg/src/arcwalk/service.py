"""FastAPI service exposing the analysis and census operations.

The CLI calls the handler functions below in-process; run the same app
under uvicorn to serve multiple clients:

    uvicorn arcwalk.service:app
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .census import DEFAULT_CANDIDATES, run_builtin_census, run_census
from .documents import (
    AnalyzeOptions,
    SCHEMA_VERSION,
    analysis_document,
    census_document,
)
from .enumeration import GraphFilter
from .errors import (
    ArcwalkError,
    EnumerationError,
    GraphError,
    InvariantError,
    OddCycleError,
)
from .graphs import parse_edge_list, parse_graph6
from .polys import PolynomialError, RatPoly

app = FastAPI(
    title="arcwalk",
    description=(
        "Exact rational analysis of arc-space kernels, discrete-walk "
        "operators and Bass-Hashimoto semi-simplicity of graphs"
    ),
    version="0.1.0",
)


class AnalyzeRequest(BaseModel):
    """One graph plus feature flags.

    Exactly one of ``graph6`` and ``edge_list`` must be given;
    ``edge_list`` is the plain text format ("n m" header, "u v" lines).
    Candidate polynomials are ascending comma-separated coefficient
    lists, e.g. "2,1,1" for x^2 + x + 2.
    """

    graph6: str | None = None
    edge_list: str | None = None
    basis: Literal["direct", "h", "bipartite", "all"] | None = None
    identities: bool = False
    semisimple: bool = False
    candidates: list[str] = Field(default_factory=lambda: ["2,0,1", "2,1,1"])


class AnalysisResponse(BaseModel):
    schema_version: str
    input: dict
    arc_order: list[list[int]]
    dimensions: dict[str, int]
    bases: dict | None = None
    identities: dict | None = None
    semisimplicity: dict | None = None


class CensusRequest(BaseModel):
    """A census over the built-in generator (``n``) or an external
    stream of graph6 records (``graph6_records``)."""

    n: int | None = None
    graph6_records: list[str] | None = None
    connected_only: bool = True
    forbid_degree_one: bool = False
    min_degree: int = 0
    regular_valency: int | None = None
    candidates: list[str] = Field(default_factory=lambda: ["2,0,1", "2,1,1"])
    jobs: int = 1


class CensusResponse(BaseModel):
    schema_version: str
    filter: dict
    provenance: str
    total_examined: int
    non_semisimple_count: int
    candidate_counts: dict[str, int]
    offenders: list[dict]
    errors: list[dict]


def _parse_candidates(items: list[str]) -> tuple[RatPoly, ...]:
    out = []
    for item in items:
        p = RatPoly.parse_coefficients(item)
        if not p.is_monic:
            raise PolynomialError(f"candidate {item!r} is not monic")
        out.append(p)
    return tuple(out)


def perform_analysis(request: AnalyzeRequest) -> dict:
    """Pure-function core of the /analyze endpoint; raises package errors."""
    if (request.graph6 is None) == (request.edge_list is None):
        raise GraphError("provide exactly one of graph6 and edge_list")
    if request.graph6 is not None:
        g = parse_graph6(request.graph6)
    else:
        g = parse_edge_list(request.edge_list)
    options = AnalyzeOptions(
        basis=request.basis,
        identities=request.identities,
        semisimple=request.semisimple,
        candidates=_parse_candidates(request.candidates),
    )
    return analysis_document(g, options)


def perform_census(request: CensusRequest) -> dict:
    """Pure-function core of the /census endpoint; raises package errors."""
    if (request.n is None) == (request.graph6_records is None):
        raise EnumerationError(
            "provide exactly one of n (built-in generator) and graph6_records"
        )
    candidates = _parse_candidates(request.candidates) or DEFAULT_CANDIDATES
    f = GraphFilter(
        connected_only=request.connected_only,
        min_degree=request.min_degree,
        regular_only=request.regular_valency,
        forbid_degree_one=request.forbid_degree_one,
    )
    if request.n is not None:
        report = run_builtin_census(
            request.n, candidates=candidates, f=f, jobs=request.jobs
        )
    else:
        report = run_census(
            request.graph6_records, candidates=candidates, f=f, jobs=request.jobs
        )
    return census_document(report)


def _http_error(exc: ArcwalkError) -> HTTPException:
    if isinstance(exc, OddCycleError):
        return HTTPException(status_code=409, detail=str(exc))
    if isinstance(exc, InvariantError):
        return HTTPException(status_code=500, detail=str(exc))
    return HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "schema_version": SCHEMA_VERSION}


@app.post("/analyze", response_model=AnalysisResponse, response_model_exclude_none=True)
def analyze(request: AnalyzeRequest) -> dict:
    try:
        return perform_analysis(request)
    except (ArcwalkError, PolynomialError) as exc:
        raise _http_error(exc) from exc


@app.post("/census", response_model=CensusResponse)
def census(request: CensusRequest) -> dict:
    try:
        return perform_census(request)
    except (ArcwalkError, PolynomialError) as exc:
        raise _http_error(exc) from exc
