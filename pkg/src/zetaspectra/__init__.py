"""Numerical laboratory for spectra of random matrices arising from the
Ihara zeta determinant formula on long-range percolation graphs."""

from .percolation import (
    AdjacencySample,
    Profile,
    ProfileFamily,
    build_h,
    circuit_rank_term,
    degree_vector,
    edge_probability,
    sample_adjacency,
)
from .spectra import (
    SpectralSummary,
    average_moments,
    counting_function,
    eigenvalue_summary,
    empirical_moment,
    log_det_density,
    log_prefactor_density,
    neg_log_zeta_density,
)
from .moments import (
    adjacency_moment,
    adjacency_weight,
    catalan_moment,
    dense_moment,
    dense_tree_weight,
    extended_binomial,
    first_edge_weight,
    limit_moment,
    limit_moments,
    tree_weight,
    tree_weight_split,
    weighted_adjacency_sum,
)
from .walks import (
    Diagram,
    Walk,
    diagram_of_walk,
    diagram_weight,
    enumerate_tree_walks,
    is_tree_type,
    oracle_moment,
    oracle_tree_weight,
)
from .zeta import (
    ReciprocalZeta,
    count_closed_paths,
    ihara_det_reciprocal,
    series_consistency,
    zeta_reciprocal_polynomial,
)
from .limits import (
    gauss_rule_from_moments,
    log_zeta_limit,
    semicircle_density,
    semicircle_log_integral,
    semicircle_moment,
    stieltjes_transform,
)

__version__ = "0.1.0"
