"""Rigidity of direction-length frameworks in the plane.

Graphs carry two edge kinds: direction edges fix the slope of a line
through two points, length edges fix their distance.  The package decides
rigidity and, for M-connected mixed graphs, generic global rigidity, and
produces inductive construction certificates and reflection witnesses.
"""

from .construction import (
    ConstructionCertificate,
    Mode,
    admissible_edges,
    admissible_moves,
    admissible_reductions,
    decompose,
    feasible_moves,
    random_construct,
    random_construct_sized,
    replay,
)
from .count_matroid import CircuitClass, classify_circuit_by_counts, count_independent, count_rank
from .errors import *  # noqa: F401,F403
from .global_rigidity import (
    NecessaryConditionsReport,
    build_witness,
    is_globally_rigid_mconn,
    is_redundantly_rigid,
    is_rigid,
    necessary_conditions,
    single_length_edge_verdict,
)
from .graph import (
    D,
    L,
    BaseKind,
    Edge,
    EdgeAddition,
    EdgeKind,
    MixedGraph,
    OneExtension,
    TwoSumDirK4,
    TwoSumK4,
    ZeroExtension,
    apply_move,
    base_graph,
    new_graph,
    pure_k4,
)
from .rank_matroid import MatroidView, find_circuit, fundamental_circuit, is_independent, rank
from .realisation import (
    Domain,
    Realisation,
    check_congruent,
    check_equivalent,
    generic_realisation,
    infinitesimally_rigid,
    rigidity_matrix,
)
from .separations import is_direction_balanced, is_k_connected, two_separations
from .structure import ear_decomposition_mixed, is_m_connected, matroid_components

__version__ = "0.1.0"
