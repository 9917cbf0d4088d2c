from .bits import Bits, combinations_of, full_mask, iter_bits, lowest, next_combination, to_bits
from .derived import (
    bipartite_double,
    cartesian_product,
    complement,
    disjoint_union,
    induced_subgraph,
    line_graph,
    square,
)
from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    closed_neighborhood_bits,
    is_dominating_bits,
    open_neighborhood,
    open_neighborhood_bits,
    remainder,
    remainder_bits,
)
from .io import (
    emit_edge_list,
    emit_graph6,
    from_networkx,
    graph_id,
    parse_edge_list,
    parse_graph6,
    parse_graph6_lines,
    read_graph,
    to_networkx,
)
from .structure import (
    BfsTree,
    bfs_tree,
    bipartition,
    bipartition_bits,
    component_bits,
    components,
    edge_count_bits,
    is_bipartite,
    is_connected,
    is_connected_bits,
    is_cycle_bits,
    is_cycle_of_length,
    is_forest,
    is_isomorphic_to_cycle,
    is_maximal_outerplanar,
    is_outerplanar,
    is_tree,
    isolated_vertices_bits,
)

__all__ = [
    "Bits",
    "BfsTree",
    "Graph",
    "VertexSet",
    "bfs_tree",
    "bipartite_double",
    "bipartition",
    "bipartition_bits",
    "cartesian_product",
    "closed_neighborhood",
    "closed_neighborhood_bits",
    "combinations_of",
    "complement",
    "component_bits",
    "components",
    "disjoint_union",
    "edge_count_bits",
    "emit_edge_list",
    "emit_graph6",
    "from_networkx",
    "full_mask",
    "graph_id",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_connected_bits",
    "is_cycle_bits",
    "is_cycle_of_length",
    "is_dominating_bits",
    "is_forest",
    "is_isomorphic_to_cycle",
    "is_maximal_outerplanar",
    "is_outerplanar",
    "is_tree",
    "isolated_vertices_bits",
    "iter_bits",
    "line_graph",
    "lowest",
    "next_combination",
    "open_neighborhood",
    "open_neighborhood_bits",
    "parse_edge_list",
    "parse_graph6",
    "parse_graph6_lines",
    "read_graph",
    "remainder",
    "remainder_bits",
    "square",
    "to_bits",
    "to_networkx",
]
