"""Derived-graph constructors. Each returns a new Graph."""

import logging

from ..errors import GraphSizeError
from .bits import Bits, full_mask, iter_bits, to_bits
from .graph import Graph, closed_neighborhood_bits

logger = logging.getLogger(__name__)

# Products and grids stay at desk scale.
MAX_DERIVED_ORDER = 4096


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph.from_adjacency(
        (full & ~nv & ~(1 << v) for v, nv in enumerate(g.adj)), validate=False
    )


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G x H with vertex (i, j) at index i * n(H) + j."""
    order = g.n * h.n
    if order > MAX_DERIVED_ORDER:
        raise GraphSizeError(f"product order {order} exceeds {MAX_DERIVED_ORDER}")
    adj: list[Bits] = [0] * order
    for i in range(g.n):
        for j in range(h.n):
            row = 0
            for j2 in iter_bits(h.adj[j]):
                row |= 1 << (i * h.n + j2)
            for i2 in iter_bits(g.adj[i]):
                row |= 1 << (i2 * h.n + j)
            adj[i * h.n + j] = row
    return Graph.from_adjacency(adj, validate=False)


def square(g: Graph) -> Graph:
    """G^2: u ~ v iff 1 <= dist(u, v) <= 2."""
    return Graph.from_adjacency(
        (closed_neighborhood_bits(g, nv) & ~(1 << v) for v, nv in enumerate(g.adj)),
        validate=False,
    )


def bipartite_double(g: Graph) -> Graph:
    """B(G): side V1 = 0..n-1, side V2 = n..2n-1, v1_i ~ v2_j iff i == j or ij in E(G)."""
    n = g.n
    adj: list[Bits] = [0] * (2 * n)
    for i in range(n):
        closed = g.adj[i] | (1 << i)
        adj[i] = closed << n
        adj[n + i] = closed
    b = Graph.from_adjacency(adj, validate=False)
    if n:
        assert b.min_degree() == g.min_degree() + 1
    return b


def induced_subgraph(g: Graph, s: Bits) -> tuple[Graph, list[int]]:
    """G[S] relabelled 0..|S|-1 in increasing order, plus the map back to G."""
    keep = list(iter_bits(s))
    index = {v: i for i, v in enumerate(keep)}
    adj = [to_bits(index[u] for u in iter_bits(g.adj[v] & s)) for v in keep]
    return Graph.from_adjacency(adj, validate=False), keep


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[Bits] = []
    offset = 0
    for h in graphs:
        adj.extend(nv << offset for nv in h.adj)
        offset += h.n
    return Graph.from_adjacency(adj, validate=False)


def line_graph(g: Graph) -> Graph:
    """L(G): one vertex per edge (in g.edges() order), adjacent when the edges share an end."""
    edges = list(g.edges())
    incident: dict[int, Bits] = {}
    for idx, (u, v) in enumerate(edges):
        incident[u] = incident.get(u, 0) | (1 << idx)
        incident[v] = incident.get(v, 0) | (1 << idx)
    adj = [(incident[u] | incident[v]) & ~(1 << idx) for idx, (u, v) in enumerate(edges)]
    return Graph.from_adjacency(adj, validate=False)
