"""Incidence matrices of a graph's digraph and the arc-space kernel.

Everything lives in Q^{2m} under the arc ordering of an ArcSystem:
forward arcs e_1..e_m first, their reverses after.  The central object
is L = ker(D_out) ∩ ker(D_in), built here three independent ways.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from gmpy2 import mpq

from .errors import GraphError
from .graphs import (
    ArcSystem,
    Graph,
    OrientedCycle,
    default_arc_system,
    fundamental_cycles,
)
from .linalg import RatMatrix, rank_and_kernel, row_space_basis

BasisLabel = Literal["direct-kernel", "h-transform", "bipartite-cycles", "K-complement"]


@dataclass(frozen=True)
class IncidenceBundle:
    """All incidence matrices derived from one oriented graph.

    din/dout are the n x 2m head/tail matrices of the digraph X; dh/dt
    the n x m head/tail matrices of the orientation; B = dt + dh and
    N = dt - dh; A the adjacency matrix.
    """

    graph: Graph
    arcs: ArcSystem
    din: RatMatrix
    dout: RatMatrix
    dh: RatMatrix
    dt: RatMatrix
    B: RatMatrix
    N: RatMatrix
    A: RatMatrix


def build_incidences(g: Graph, a: ArcSystem) -> IncidenceBundle:
    if a.graph != g:
        raise GraphError("arc system does not belong to this graph")
    n, m = g.n, g.m
    dt = [[0] * m for _ in range(n)]
    dh = [[0] * m for _ in range(n)]
    for j, (tail, head) in enumerate(a.orientation):
        dt[tail][j] = 1
        dh[head][j] = 1
    dt_m = RatMatrix(n, m, dt)
    dh_m = RatMatrix(n, m, dh)
    return IncidenceBundle(
        graph=g,
        arcs=a,
        dout=RatMatrix.hstack(dt_m, dh_m),
        din=RatMatrix.hstack(dh_m, dt_m),
        dh=dh_m,
        dt=dt_m,
        B=dt_m + dh_m,
        N=dt_m - dh_m,
        A=RatMatrix(n, n, g.adjacency_matrix()),
    )


@dataclass(frozen=True)
class SubspaceBasis:
    """A basis of a subspace of the arc space Q^{2m}.

    ``vectors`` holds the basis as columns; ``label`` names which
    construction produced it.
    """

    ambient_dim: int
    vectors: RatMatrix
    label: BasisLabel
    arc_system: ArcSystem

    @property
    def dim(self) -> int:
        return self.vectors.cols


def _empty_basis(a: ArcSystem, label: BasisLabel) -> SubspaceBasis:
    dim = a.num_arcs
    return SubspaceBasis(dim, RatMatrix(dim, 0, [[] for _ in range(dim)]), label, a)


def kernel_L_direct(g: Graph, a: ArcSystem | None = None) -> SubspaceBasis:
    """L as the kernel of the stacked 2n x 2m matrix [D_out; D_in]."""
    a = a or default_arc_system(g)
    bundle = build_incidences(g, a)
    stacked = RatMatrix.vstack(bundle.dout, bundle.din)
    _, kernel = rank_and_kernel(stacked)
    return SubspaceBasis(a.num_arcs, kernel, "direct-kernel", a)


def theorem_basis_L(g: Graph, a: ArcSystem | None = None) -> SubspaceBasis:
    """L from the kernels of B and N.

    Each kernel vector v of B lifts to the arc-space vector (v; v), each
    kernel vector w of N to (w; -w): the images of (v; 0) and (0; w)
    under the unnormalized transform (I I; I -I).
    """
    a = a or default_arc_system(g)
    bundle = build_incidences(g, a)
    _, ker_b = rank_and_kernel(bundle.B)
    _, ker_n = rank_and_kernel(bundle.N)
    cols = []
    for v in ker_b.columns():
        cols.append(v + v)
    for w in ker_n.columns():
        cols.append(w + [-x for x in w])
    if not cols:
        return _empty_basis(a, "h-transform")
    return SubspaceBasis(a.num_arcs, RatMatrix.from_columns(cols), "h-transform", a)


def signed_cycle_vector(cyc: OrientedCycle, a: ArcSystem) -> list[mpq]:
    """The ±1 edge-indexed vector of a cycle relative to the orientation."""
    vec = [mpq(0)] * a.graph.m
    for tail, head in cyc.arcs:
        i = a.edge_index(tail, head)  # raises if the edge is absent
        vec[i] = mpq(1) if a.orientation[i] == (tail, head) else mpq(-1)
    return vec


def bipartite_cycle_basis(g: Graph) -> SubspaceBasis:
    """Explicit basis of L for bipartite graphs.

    Rebuilds the Y-to-Z orientation internally; for each fundamental
    cycle with signed vector z it emits (z; -z) and (z; z) on the
    (forward; reverse) arc blocks.  Raises OddCycleError otherwise.
    """
    a = default_arc_system(g, bipartite=True)
    cols = []
    for cyc in fundamental_cycles(g, a):
        z = signed_cycle_vector(cyc, a)
        cols.append(z + [-x for x in z])  # y_C
        cols.append(z + z)  # w_C
    if not cols:
        return _empty_basis(a, "bipartite-cycles")
    return SubspaceBasis(a.num_arcs, RatMatrix.from_columns(cols), "bipartite-cycles", a)


def subspace_K(g: Graph, a: ArcSystem | None = None) -> SubspaceBasis:
    """Basis of rowspace(D_in) + rowspace(D_out) inside Q^{2m}.

    The orthogonal complement of L under the standard bilinear form;
    dim K + dim L = 2m always.
    """
    a = a or default_arc_system(g)
    bundle = build_incidences(g, a)
    stacked = RatMatrix.vstack(bundle.dout, bundle.din)
    basis_rows = row_space_basis(stacked)
    if basis_rows.rows == 0:
        return _empty_basis(a, "K-complement")
    return SubspaceBasis(a.num_arcs, basis_rows.T, "K-complement", a)


def check_block_diagonalization(g: Graph, a: ArcSystem | None = None) -> bool:
    """Verify H'·[D_out(σ) D_in(σ); D_in(σ) D_out(σ)]·H' = 2·diag(B, N).

    H' = (I I; I -I) is the unnormalized transform; the factor 2 stands
    in for the two 1/sqrt(2) normalizations, keeping all entries rational.
    """
    a = a or default_arc_system(g)
    bundle = build_incidences(g, a)
    n, m = g.n, g.m
    stacked = RatMatrix.vstack(bundle.dout, bundle.din)
    h_left = _h_prime(n)
    h_right = _h_prime(m)
    lhs = h_left * stacked * h_right
    zero_nm = RatMatrix.zeros(n, m)
    rhs = RatMatrix.vstack(
        RatMatrix.hstack(bundle.B, zero_nm),
        RatMatrix.hstack(zero_nm, bundle.N),
    ) * 2
    return lhs == rhs


def _h_prime(k: int) -> RatMatrix:
    i = RatMatrix.identity(k)
    return RatMatrix.vstack(RatMatrix.hstack(i, i), RatMatrix.hstack(i, -i))


def spans_same_subspace(b1: SubspaceBasis, b2: SubspaceBasis) -> bool:
    """Mutual containment via one rank computation on the concatenation."""
    if b1.ambient_dim != b2.ambient_dim:
        return False
    if b1.dim != b2.dim:
        return False
    if b1.dim == 0:
        return True
    joint = RatMatrix.hstack(b1.vectors, b2.vectors)
    r, _ = rank_and_kernel(joint)
    return r == b1.dim


def basis_contains(basis: SubspaceBasis, vectors: RatMatrix) -> bool:
    """True iff every column of ``vectors`` lies in the span of the basis."""
    if vectors.cols == 0:
        return True
    if basis.dim == 0:
        return vectors.is_zero()
    joint = RatMatrix.hstack(basis.vectors, vectors)
    r, _ = rank_and_kernel(joint)
    return r == basis_rank(basis)


def basis_rank(basis: SubspaceBasis) -> int:
    r, _ = rank_and_kernel(basis.vectors)
    return r
