"""Spectral upper bounds on the (quantum) independence number of a graph."""

from .bounds import (
    BoundValue,
    complement_inertia_check,
    golubev_bound,
    hoffman_bound,
    inertia_bound,
    rank_bound_clique,
    validate_weight_matrix,
)
from .catalog import get_graph
from .certificates import (
    CertificateVerdict,
    ProjectorFamily,
    classical_certificate,
    collapse_to_packing,
    isotropy_check,
    verify_projective_packing,
    verify_quantum_certificate,
)
from .exact import IndependentSetWitness, clique_number, independence_number, maximum_matching_bipartite
from .graph import Graph, complement, is_bipartite, is_regular
from .graphio import emit_graph6, parse_dimacs, parse_graph6
from .linalg import HermitianMatrix, Inertia, adjacency_matrix, eigenvalues_hermitian, inertia, laplacian
from .report import BoundReport, Certification, certify_alpha_q
from .theta import ThetaResult, lovasz_theta, theta_regular_cap
from .weights import WeightSearchResult, bipartite_tight_weights, search_weights

__version__ = "0.1.0"
