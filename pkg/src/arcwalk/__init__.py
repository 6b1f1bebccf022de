"""Exact rational arc-space analysis of graphs.

Core objects: graphs with graph6 I/O, exact rational linear algebra,
the arc-space kernel L = ker(D_out) ∩ ker(D_in) with its basis
constructions, discrete-walk operators (U, P, T, S+) and the
semi-simplicity census over small graphs.
"""

from .census import CensusReport, DEFAULT_CANDIDATES, run_builtin_census, run_census
from .enumeration import (
    GraphFilter,
    canonical_form,
    canonical_graph6,
    generate_nonisomorphic,
)
from .errors import (
    ArcwalkError,
    EnumerationError,
    Graph6Error,
    GraphError,
    InvariantError,
    OddCycleError,
    OperatorError,
)
from .graphs import (
    ArcSystem,
    Graph,
    OrientedCycle,
    StructureSummary,
    default_arc_system,
    format_edge_list,
    fundamental_cycles,
    parse_edge_list,
    parse_graph6,
    structure_summary,
    to_graph6,
)
from .linalg import RatMatrix, min_poly, rank_and_kernel
from .polys import RatPoly, poly_divides, poly_gcd, poly_lcm, squarefree_analysis
from .subspaces import (
    IncidenceBundle,
    SubspaceBasis,
    bipartite_cycle_basis,
    build_incidences,
    check_block_diagonalization,
    kernel_L_direct,
    signed_cycle_vector,
    spans_same_subspace,
    subspace_K,
    theorem_basis_L,
)
from .walks import (
    SemisimplicityReport,
    WalkOperators,
    build_walk_operators,
    operator_identity_suite,
    semisimplicity_report,
)

__version__ = "0.1.0"
