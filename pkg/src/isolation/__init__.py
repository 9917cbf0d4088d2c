"""F-isolation numbers of graphs.

An F-isolating set S of G leaves G - N[S] without a copy of any member of F;
iota(G, F) is the smallest size of such a set. Subpackages: graph_core (bitset
graphs, I/O), patterns (families and freeness), solvers (exact search),
constructive (algorithms with promised bounds), families (generators), bounds
(closed-form bounds), verify (sweeps) and cli.
"""

from .errors import (
    ConstructionError,
    GraphParseError,
    GraphSizeError,
    IsolationError,
    ParameterError,
    PreconditionError,
    StructureError,
)
from .graph_core import Graph, VertexSet
from .patterns import ISOLATION, Certificate, StarFamily, parse_family
from .solvers import exact_domination, exact_isolation

__all__ = [
    "ISOLATION",
    "Certificate",
    "ConstructionError",
    "Graph",
    "GraphParseError",
    "GraphSizeError",
    "IsolationError",
    "ParameterError",
    "PreconditionError",
    "StarFamily",
    "StructureError",
    "VertexSet",
    "exact_domination",
    "exact_isolation",
    "parse_family",
]
