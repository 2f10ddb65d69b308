"""Edge-weighted average eccentricity: metrics, extremal weightings, bounds and searches."""

from .connectivity import CutSet, edge_connectivity, min_edge_cut
from .extremal import (
    BoundsReport,
    bounds_for,
    mincut_weights,
    spanning_tree_zero_weights,
    tree_avec_min_formula,
    tree_max_weights,
    tree_min_weights,
)
from .graph import (
    Graph,
    TreeProfile,
    WeightFunction,
    complement,
    generate,
    is_connected,
    is_tree,
    make_graph,
    make_weights,
    ones,
    tree_profile,
)
from .metrics import (
    EccentricityProfile,
    avec,
    eccentricity_profile,
    leaf_distance_identity_check,
    leaf_pair_count,
    weighted_distance,
)
from .nordhaus_gaddum import NGReport, classify_pair, ng_bounds, ng_witnesses
from .optimizer import OptimizationResult, grid_search, local_search

__version__ = "0.1.0"
