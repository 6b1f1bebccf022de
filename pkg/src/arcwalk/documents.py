"""JSON-ready documents for the service and CLI.

All rationals are serialized as "num/den" strings, never floats, and
document key order is fixed so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .census import CensusReport
from .errors import InvariantError
from .graphs import Graph, default_arc_system, structure_summary, to_graph6
from .linalg import rank_and_kernel
from .polys import RatPoly
from .subspaces import (
    SubspaceBasis,
    bipartite_cycle_basis,
    build_incidences,
    kernel_L_direct,
    subspace_K,
    theorem_basis_L,
)
from .walks import IdentityResult, SemisimplicityReport, operator_identity_suite, semisimplicity_report

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class AnalyzeOptions:
    """Feature flags for one analysis run."""

    basis: str | None = None  # "direct" | "h" | "bipartite" | "all" | None
    identities: bool = False
    semisimple: bool = False
    candidates: tuple[RatPoly, ...] = field(default=())


def poly_dict(p: RatPoly) -> dict:
    return {"coefficients": p.coefficient_strings(), "text": str(p)}


def basis_dict(basis: SubspaceBasis) -> dict:
    return {
        "label": basis.label,
        "ambient_dim": basis.ambient_dim,
        "dim": basis.dim,
        "arc_order": [list(arc) for arc in basis.arc_system.arcs()],
        "vectors": [
            [row[j] for row in basis.vectors.to_strings()]
            for j in range(basis.vectors.cols)
        ],
    }


def identity_dict(results: dict[str, IdentityResult]) -> dict:
    return {
        name: {"status": r.status, **({"reason": r.reason} if r.reason else {})}
        for name, r in results.items()
    }


def semisimplicity_dict(report: SemisimplicityReport) -> dict:
    return {
        "graph6": report.graph6,
        "min_poly": poly_dict(report.min_poly),
        "is_semisimple": report.is_semisimple,
        "repeated_part": poly_dict(report.repeated_part),
        "matched_candidates": [str(q) for q in report.matched_candidates],
        "min_degree": report.min_degree,
        "regular_valency": report.regular_valency,
    }


def analysis_document(g: Graph, options: AnalyzeOptions) -> dict:
    """Run the requested analyses on one graph and assemble the document.

    Raises OddCycleError when a bipartite basis is requested for a
    non-bipartite graph, and InvariantError when an exact identity that
    must always hold fails (always a bug, never a warning).
    """
    summary = structure_summary(g)
    arcs = default_arc_system(g)
    bundle = build_incidences(g, arcs)
    rank_b, _ = rank_and_kernel(bundle.B)
    rank_n, _ = rank_and_kernel(bundle.N)
    basis_l = kernel_L_direct(g, arcs)
    basis_k = subspace_K(g, arcs)
    dim_l_expected = 2 * g.m - 2 * g.n + summary.b + summary.c
    if basis_l.dim != dim_l_expected:
        raise InvariantError(
            f"dim L = {basis_l.dim} differs from 2m-2n+b+c = {dim_l_expected}"
        )
    if basis_k.dim + basis_l.dim != 2 * g.m:
        raise InvariantError("dim K + dim L != 2m")

    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "graph6": to_graph6(g),
            "n": g.n,
            "m": g.m,
            "b": summary.b,
            "c": summary.c,
            "degrees": list(summary.degrees),
        },
        "arc_order": [list(arc) for arc in arcs.arcs()],
        "dimensions": {
            "rank_B": rank_b,
            "rank_N": rank_n,
            "dim_L": basis_l.dim,
            "dim_K": basis_k.dim,
        },
    }

    if options.basis:
        bases = {}
        if options.basis in ("direct", "all"):
            bases["direct"] = basis_dict(basis_l)
        if options.basis in ("h", "all"):
            bases["h_transform"] = basis_dict(theorem_basis_L(g, arcs))
        if options.basis == "bipartite" or (
            options.basis == "all" and summary.b == summary.c
        ):
            bases["bipartite"] = basis_dict(bipartite_cycle_basis(g))
        doc["bases"] = bases

    if options.identities:
        doc["identities"] = identity_dict(operator_identity_suite(g, arcs))

    if options.semisimple:
        doc["semisimplicity"] = semisimplicity_dict(
            semisimplicity_report(g, options.candidates, arcs)
        )
    return doc


def census_document(report: CensusReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "filter": report.graph_filter.to_dict(),
        "provenance": report.provenance,
        "total_examined": report.total_examined,
        "non_semisimple_count": report.non_semisimple_count,
        "candidate_counts": report.candidate_counts,
        "offenders": [semisimplicity_dict(r) for r in report.offenders],
        "errors": [
            {"record": e.record, "message": e.message} for e in report.errors
        ],
    }


def canonical_json(doc: dict) -> str:
    """Byte-stable rendering used by the CLI and stored reports."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
