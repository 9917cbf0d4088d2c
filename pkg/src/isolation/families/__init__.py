from ..graph_core import line_graph
from .extremal import (
    compose_general,
    corona_k2,
    disjoint_copies,
    equal_degree_caterpillar,
    f_rst,
    kr_minus_hamiltonian,
    lb_equality_bipartite,
    ng_sharp_delta0,
    ng_sharp_delta1,
    outerplanar_sharp,
    path_of_stars,
    star_lower_sharp,
    subdivided_star,
)
from .registry import FAMILIES, STANDARD_KINDS, FamilyEntry, generate, parse_params, standard
from .standard import (
    GridKind,
    complete,
    complete_bipartite,
    cycle,
    empty,
    fan_triangulation,
    grid,
    hypercube,
    path,
    petersen,
    random_polygon_triangulation,
    random_regular,
    random_tree,
    star,
)
__all__ = [
    "FAMILIES",
    "STANDARD_KINDS",
    "FamilyEntry",
    "GridKind",
    "complete",
    "complete_bipartite",
    "compose_general",
    "corona_k2",
    "cycle",
    "disjoint_copies",
    "empty",
    "equal_degree_caterpillar",
    "f_rst",
    "fan_triangulation",
    "generate",
    "grid",
    "hypercube",
    "kr_minus_hamiltonian",
    "lb_equality_bipartite",
    "line_graph",
    "ng_sharp_delta0",
    "ng_sharp_delta1",
    "outerplanar_sharp",
    "parse_params",
    "path",
    "path_of_stars",
    "petersen",
    "random_polygon_triangulation",
    "random_regular",
    "random_tree",
    "standard",
    "star",
    "star_lower_sharp",
    "subdivided_star",
]
