"""rigikit: exact computations in the generic d-dimensional rigidity matroid.

Rank, independence, rigidity, and circuit decisions with explicit
certificates; the overlapping-clique circuit families and the operations
that build them; isomorphism-free enumeration; and a verification harness.
"""

__version__ = "0.1.0"

from .canon import (
    CanonicalLabeling,
    automorphism_generators,
    canonical_code,
    canonical_form,
    canonical_labeling,
)
from .constructions import (
    LabeledConstruction,
    build_glued_cliques,
    cone,
    enumerate_glued_cliques_plus,
    one_extension,
    t_sum,
    two_sum,
    vertex_split,
    zero_extension,
)
from .enumeration import SearchSpec, enumerate_constrained, enumerate_regular
from .graph import (
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    contract_edge,
    cycle_graph,
    degree_profile,
    distance,
    find_deg23_witness,
    graph6_decode,
    graph6_encode,
    is_k_connected,
)
from .linalg import DEFAULT_PRIME
from .rigidity import (
    Certificate,
    MatroidVerdict,
    Realization,
    RigidityMatrix,
    SparsityReport,
    count_upper_bound,
    dependent_by_cut,
    generic_rank,
    is_circuit,
    is_d_sparse,
    is_flexible_circuit,
    is_independent,
    is_rigid,
    random_realization,
    rank_rational,
    rigidity_matrix,
    rigidity_target,
    small_cut,
    stress_support,
)
