"""Star-matching versus star size Ramsey numbers: exact arrowing decisions,
extremal constructions, proof-guided colorings and isomorph-free enumeration."""

from .arrowing import (
    ArrowingCertificate,
    ArrowingInstance,
    SearchBudgetExceeded,
    TwoColoring,
    arrows,
    blue_max_degree,
    check_certificate,
    coloring_is_good,
    find_good_coloring,
    naive_arrows,
)
from .canon import CanonicalForm, canonical_form, canonical_labeling, canonize
from .constructions import (
    DegreePartition,
    construct_upper,
    cover_coloring,
    degree_partition,
    m_min,
    min_edges_for_t,
)
from .enumeration import (
    CacheRecord,
    GraphClassQuery,
    RamseyResult,
    VerdictCache,
    compute_size_ramsey,
    enumerate_graphs,
)
from .graph import Graph, complete, cycle, disjoint_union, from_edge_list, parse_graph6, path, star, to_graph6
from .packing import is_vertex_cover, max_matching_size, star_packing_number
from .proof import ProofTrace, proof_color

__version__ = "0.1.0"
