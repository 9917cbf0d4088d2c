from .common import certify, is_isolating
from .greedy import greedy_pattern_removal, greedy_star_removal
from .grids import grid_isolating, printed_set
from .products import double_dominating, product_isolating
from .randomized import (
    bipartite_sampling_probability,
    randomized_bipartite_isolating,
    randomized_isolating,
    sampling_probability,
)
from .seeded import isolating_with_seed_set, max_degree_half, one_isolation_via_partition
from .third import isolating_components, isolating_third
from .trees import equal_degree_tree_isolating, tree_k_isolating

__all__ = [
    "bipartite_sampling_probability",
    "certify",
    "double_dominating",
    "equal_degree_tree_isolating",
    "greedy_pattern_removal",
    "greedy_star_removal",
    "grid_isolating",
    "is_isolating",
    "isolating_components",
    "isolating_third",
    "isolating_with_seed_set",
    "max_degree_half",
    "one_isolation_via_partition",
    "printed_set",
    "product_isolating",
    "randomized_bipartite_isolating",
    "randomized_isolating",
    "sampling_probability",
    "tree_k_isolating",
]
