"""Semi-simplicity sweeps over graph streams.

A census takes a stream of graphs (built-in generator or external
graph6 records), filters it, computes the Bass-Hashimoto minimal
polynomial of every survivor and aggregates the non-semi-simple ones.
Evaluation order never affects the report: records are sorted by
graph6 before aggregation.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .enumeration import GraphFilter, generate_nonisomorphic
from .errors import Graph6Error, GraphError
from .graphs import Graph, parse_graph6, to_graph6
from .polys import RatPoly
from .walks import SemisimplicityReport, semisimplicity_report

#: The repeated factors the small-graph sweep looks for: x^2 + 2 and
#: x^2 + x + 2.
DEFAULT_CANDIDATES: tuple[RatPoly, ...] = (
    RatPoly((2, 0, 1)),
    RatPoly((2, 1, 1)),
)


@dataclass(frozen=True)
class CensusError:
    record: str
    message: str


@dataclass(frozen=True)
class CensusReport:
    """Aggregate outcome of one semi-simplicity sweep."""

    total_examined: int
    non_semisimple_count: int
    candidate_counts: dict[str, int]
    offenders: tuple[SemisimplicityReport, ...]
    graph_filter: GraphFilter
    provenance: str  # "built-in" | "external stream"
    errors: tuple[CensusError, ...] = field(default=())


def _evaluate_one(
    g: Graph, candidates: tuple[RatPoly, ...]
) -> SemisimplicityReport:
    if g.m == 0:
        # No arcs: T is 0-dimensional, vacuously semi-simple.
        return SemisimplicityReport(
            graph6=to_graph6(g),
            min_poly=RatPoly.one(),
            is_semisimple=True,
            repeated_part=RatPoly.one(),
            matched_candidates=(),
            min_degree=0,
            regular_valency=g.is_regular(),
        )
    return semisimplicity_report(g, candidates)


# Worker entry point for multiprocessing (must be picklable / top level).
def _evaluate_record(args: tuple[str, tuple[tuple, ...]]) -> SemisimplicityReport:
    graph6, coeff_tuples = args
    candidates = tuple(RatPoly(c) for c in coeff_tuples)
    return _evaluate_one(parse_graph6(graph6), candidates)


def run_census(
    source: Iterable[Graph | str],
    candidates: tuple[RatPoly, ...] = DEFAULT_CANDIDATES,
    f: GraphFilter | None = None,
    jobs: int = 1,
    provenance: str = "external stream",
    progress: Callable[[int, int], None] | None = None,
) -> CensusReport:
    """Sweep a stream of graphs (or graph6 records) for non-semi-simple
    Bass-Hashimoto operators.

    Unreadable records become error entries and the sweep continues.
    The report is identical for any worker count and any input order.
    """
    f = f or GraphFilter()
    for q in candidates:
        if not q.is_monic:
            raise ValueError(f"candidate {q} is not monic")
    records: list[str] = []
    errors: list[CensusError] = []
    for item in source:
        if isinstance(item, Graph):
            records.append(to_graph6(item))
            continue
        text = item.strip()
        if not text:
            continue
        try:
            records.append(to_graph6(parse_graph6(text)))
        except (Graph6Error, GraphError) as exc:
            errors.append(CensusError(record=text, message=str(exc)))
    kept = sorted(
        {r for r in records if f.matches(parse_graph6(r))}
    )

    coeff_tuples = tuple(tuple(q.coeffs) for q in candidates)
    if jobs > 1 and len(kept) > 1:
        with multiprocessing.Pool(jobs) as pool:
            reports = pool.map(
                _evaluate_record,
                [(r, coeff_tuples) for r in kept],
                chunksize=max(1, len(kept) // (jobs * 8)),
            )
    else:
        reports = []
        for i, r in enumerate(kept):
            reports.append(_evaluate_record((r, coeff_tuples)))
            if progress is not None:
                progress(i + 1, len(kept))

    offenders = tuple(rep for rep in reports if not rep.is_semisimple)
    candidate_counts = {
        str(q): sum(1 for rep in offenders if q in rep.matched_candidates)
        for q in candidates
    }
    return CensusReport(
        total_examined=len(kept),
        non_semisimple_count=len(offenders),
        candidate_counts=candidate_counts,
        offenders=offenders,
        graph_filter=f,
        provenance=provenance,
        errors=tuple(errors),
    )


def run_builtin_census(
    n: int,
    candidates: tuple[RatPoly, ...] = DEFAULT_CANDIDATES,
    f: GraphFilter | None = None,
    jobs: int = 1,
    progress: Callable[[int, int], None] | None = None,
) -> CensusReport:
    """Census over the built-in non-isomorphic generator for one n."""
    f = f or GraphFilter()
    report = run_census(
        generate_nonisomorphic(n, f),
        candidates=candidates,
        f=f,
        jobs=jobs,
        provenance="built-in",
        progress=progress,
    )
    return report
