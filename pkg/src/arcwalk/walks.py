"""Arc-space walk operators: reversal P, transition U, Bass-Hashimoto T.

All four operators are built entrywise from the arc system, with the
incidence-matrix formulas kept as separately checkable identities.  Row
and column conventions follow the entrywise definitions: U and S+(U)
take an arc ending at v (column) to arcs leaving v (rows); T is indexed
the other way round, T[a, b] = 1 iff head(a) = tail(b) and b is not the
reverse of a.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import OperatorError
from .graphs import ArcSystem, Graph, default_arc_system
from .linalg import RatMatrix, min_poly, rank_and_kernel
from .polys import RatPoly, poly_divides, squarefree_analysis
from .subspaces import build_incidences, kernel_L_direct


@dataclass(frozen=True)
class WalkOperators:
    """The four 2m x 2m arc-indexed operators of one graph."""

    graph: Graph
    arcs: ArcSystem
    P: RatMatrix
    U: RatMatrix
    T: RatMatrix
    S_plus_U: RatMatrix


def build_walk_operators(g: Graph, a: ArcSystem | None = None) -> WalkOperators:
    if g.m == 0:
        raise OperatorError("walk operators are undefined for an edgeless graph")
    a = a or default_arc_system(g)
    arcs = a.arcs()
    k = len(arcs)
    degs = g.degrees()
    arcs_by_tail: list[list[int]] = [[] for _ in range(g.n)]
    for i, (tail, _) in enumerate(arcs):
        arcs_by_tail[tail].append(i)

    p = [[0] * k for _ in range(k)]
    for i in range(k):
        p[i][a.reverse_index(i)] = 1

    u = [[mpq(0)] * k for _ in range(k)]
    t = [[0] * k for _ in range(k)]
    for j, (_, head) in enumerate(arcs):
        coin = mpq(2, degs[head])
        rev = a.reverse_index(j)
        for i in arcs_by_tail[head]:
            u[i][j] = coin - 1 if i == rev else coin
            if i != rev:
                t[j][i] = 1
    s = [[1 if x > 0 else 0 for x in row] for row in u]
    return WalkOperators(
        graph=g,
        arcs=a,
        P=RatMatrix(k, k, p),
        U=RatMatrix(k, k, u),
        T=RatMatrix(k, k, t),
        S_plus_U=RatMatrix(k, k, s),
    )


# ---------------------------------------------------------------------------
# identity suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityResult:
    status: str  # "pass" | "fail" | "skipped"
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _checked(holds: bool) -> IdentityResult:
    return IdentityResult("pass" if holds else "fail")


def _skipped(reason: str) -> IdentityResult:
    return IdentityResult("skipped", reason)


def operator_identity_suite(g: Graph, a: ArcSystem | None = None) -> dict[str, IdentityResult]:
    """Exact checks of the incidence/walk-operator identities.

    Identities that only hold under a degree or regularity hypothesis are
    reported as skipped, with the reason, when the hypothesis fails.
    """
    a = a or default_arc_system(g)
    bundle = build_incidences(g, a)
    degs = g.degrees()
    deg_diag = RatMatrix(
        g.n, g.n, [[degs[i] if i == j else 0 for j in range(g.n)] for i in range(g.n)]
    )
    results: dict[str, IdentityResult] = {
        "din_doutT_equals_adjacency": _checked(bundle.din * bundle.dout.T == bundle.A),
        "din_dinT_equals_degree_diagonal": _checked(bundle.din * bundle.din.T == deg_diag),
        "dout_doutT_equals_degree_diagonal": _checked(bundle.dout * bundle.dout.T == deg_diag),
    }
    if g.m == 0:
        no_arcs = _skipped("graph has no arcs")
        for name in (
            "din_P_equals_dout",
            "dout_P_equals_din",
            "U_unitary",
            "splus_equals_dtT_dh_minus_P",
            "PTP_equals_splus",
            "L_invariant_under_T",
            "L_invariant_under_U",
        ):
            results[name] = no_arcs
        return results

    ops = build_walk_operators(g, a)
    results["din_P_equals_dout"] = _checked(bundle.din * ops.P == bundle.dout)
    results["dout_P_equals_din"] = _checked(bundle.dout * ops.P == bundle.din)

    if g.is_regular() is not None:
        eye = RatMatrix.identity(a.num_arcs)
        results["U_unitary"] = _checked(ops.U * ops.U.T == eye)
    else:
        results["U_unitary"] = _skipped("graph is not regular")

    min_deg = min(degs)
    if min_deg >= 2:
        formula = bundle.dout.T * bundle.din - ops.P
        results["splus_equals_dtT_dh_minus_P"] = _checked(ops.S_plus_U == formula)
        results["PTP_equals_splus"] = _checked(ops.P * ops.T * ops.P == ops.S_plus_U)
    else:
        reason = f"minimum degree {min_deg} < 2"
        results["splus_equals_dtT_dh_minus_P"] = _skipped(reason)
        results["PTP_equals_splus"] = _skipped(reason)

    basis = kernel_L_direct(g, a)
    results["L_invariant_under_T"] = _checked(_maps_into(ops.T, basis.vectors))
    results["L_invariant_under_U"] = _checked(_maps_into(ops.U, basis.vectors))
    return results


def _maps_into(M: RatMatrix, basis_vectors: RatMatrix) -> bool:
    """True iff M maps span(columns) into itself (rank test)."""
    if basis_vectors.cols == 0:
        return True
    image = M * basis_vectors
    joint = RatMatrix.hstack(basis_vectors, image)
    r, _ = rank_and_kernel(joint)
    return r == basis_vectors.cols


# ---------------------------------------------------------------------------
# semi-simplicity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemisimplicityReport:
    """Semi-simplicity facts about the Bass-Hashimoto operator of one graph.

    A matrix over Q is semi-simple (diagonalizable over C) exactly when
    its minimal polynomial is squarefree.  ``matched_candidates`` lists
    the caller's candidate factors q with q^2 dividing the minimal
    polynomial.
    """

    graph6: str
    min_poly: RatPoly
    is_semisimple: bool
    repeated_part: RatPoly
    matched_candidates: tuple[RatPoly, ...]
    min_degree: int
    regular_valency: int | None


def semisimplicity_report(
    g: Graph,
    candidates: tuple[RatPoly, ...] = (),
    a: ArcSystem | None = None,
) -> SemisimplicityReport:
    """Minimal polynomial of T and its repeated-factor analysis."""
    from .graphs import to_graph6

    ops = build_walk_operators(g, a)  # raises OperatorError when m = 0
    p = min_poly(ops.T)
    is_ss, repeated = squarefree_analysis(p)
    matched = tuple(q for q in candidates if poly_divides(q * q, p))
    return SemisimplicityReport(
        graph6=to_graph6(g),
        min_poly=p,
        is_semisimple=is_ss,
        repeated_part=repeated,
        matched_candidates=matched,
        min_degree=min(g.degrees()),
        regular_valency=g.is_regular(),
    )
