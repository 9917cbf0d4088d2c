"""Structural queries: components, trees, cycles, BFS trees, bipartitions, outerplanarity."""

import logging
from collections import deque

import networkx as nx
from pydantic import BaseModel, Field

from ..errors import StructureError
from .bits import Bits, full_mask, iter_bits, lowest
from .graph import Graph, VertexSet

logger = logging.getLogger(__name__)


class BfsTree(BaseModel):
    """Breadth-first spanning tree of the subgraph induced on `within`.

    Vertices outside the tree have parent -1 and level -1; the root has parent -1 and level 0.
    Children are discovered in increasing vertex order.
    """

    root: int = Field(..., description="Root vertex")
    parent: list[int] = Field(..., description="Tree parent per vertex of the host graph")
    level: list[int] = Field(..., description="Distance from the root per vertex")
    order: list[int] = Field(..., description="Vertices in BFS discovery order")

    @property
    def depth(self) -> int:
        return max(self.level[v] for v in self.order)

    def children(self, v: int) -> list[int]:
        return [c for c in self.order if self.parent[c] == v]

    def level_set(self, i: int) -> list[int]:
        return [v for v in self.order if self.level[v] == i]

    def is_leaf(self, v: int) -> bool:
        return not any(self.parent[c] == v for c in self.order)


def component_bits(g: Graph, within: Bits | None = None) -> list[Bits]:
    """Connected components of g[within], ordered by their smallest vertex."""
    todo = full_mask(g.n) if within is None else within
    out: list[Bits] = []
    while todo:
        comp = frontier = todo & -todo
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & todo & ~comp
            comp |= frontier
        out.append(comp)
        todo &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    return [VertexSet.from_bits(g.n, c) for c in component_bits(g)]


def is_connected_bits(g: Graph, within: Bits) -> bool:
    return len(component_bits(g, within)) <= 1


def is_connected(g: Graph) -> bool:
    """The null graph counts as connected."""
    return len(component_bits(g)) <= 1


def edge_count_bits(g: Graph, within: Bits) -> int:
    return sum((g.adj[v] & within).bit_count() for v in iter_bits(within)) // 2


def is_forest(g: Graph) -> bool:
    return g.edge_count() == g.n - len(component_bits(g))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count() == g.n - 1 and is_connected(g)


def is_cycle_bits(g: Graph, within: Bits) -> bool:
    """g[within] is a cycle C_k with k = |within| >= 3."""
    if within.bit_count() < 3:
        return False
    if any((g.adj[v] & within).bit_count() != 2 for v in iter_bits(within)):
        return False
    return is_connected_bits(g, within)


def is_cycle_of_length(g: Graph, k: int) -> bool:
    return g.n == k and is_cycle_bits(g, full_mask(g.n))


def is_isomorphic_to_cycle(g: Graph) -> bool:
    return is_cycle_bits(g, full_mask(g.n))


def bfs_tree(g: Graph, root: int, within: Bits | None = None) -> BfsTree:
    """BFS tree of g[within] (default: all of g) rooted at `root`."""
    region = full_mask(g.n) if within is None else within
    if not (0 <= root < g.n) or not region >> root & 1:
        raise StructureError(f"root {root} is not a vertex of the graph")
    parent = [-1] * g.n
    level = [-1] * g.n
    level[root] = 0
    order = [root]
    seen = 1 << root
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for c in iter_bits(g.adj[v] & region & ~seen):
            seen |= 1 << c
            parent[c] = v
            level[c] = level[v] + 1
            order.append(c)
            queue.append(c)
    if seen != region:
        raise StructureError("bfs_tree needs a connected graph")
    return BfsTree(root=root, parent=parent, level=level, order=order)


def bipartition_bits(g: Graph, within: Bits | None = None) -> tuple[Bits, Bits] | None:
    """Two-colouring of g[within]; the side holding each component's smallest vertex is first."""
    region = full_mask(g.n) if within is None else within
    side = [-1] * g.n
    first = second = 0
    for comp in component_bits(g, region):
        start = lowest(comp)
        side[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            if side[v] == 0:
                first |= 1 << v
            else:
                second |= 1 << v
            for u in iter_bits(g.adj[v] & region):
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return first, second


def is_bipartite(g: Graph) -> bool:
    return bipartition_bits(g) is not None


def bipartition(g: Graph) -> tuple[VertexSet, VertexSet]:
    parts = bipartition_bits(g)
    if parts is None:
        raise StructureError("graph has an odd cycle")
    return VertexSet.from_bits(g.n, parts[0]), VertexSet.from_bits(g.n, parts[1])


def is_outerplanar(g: Graph) -> bool:
    """g is outerplanar iff g plus a vertex joined to everything is planar."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n + 1))
    h.add_edges_from(g.edges())
    h.add_edges_from((v, g.n) for v in range(g.n))
    planar, _ = nx.check_planarity(h)
    return bool(planar)


def is_maximal_outerplanar(g: Graph) -> bool:
    if g.n < 3:
        return g.edge_count() == g.n * (g.n - 1) // 2
    return g.edge_count() == 2 * g.n - 3 and is_outerplanar(g)


def isolated_vertices_bits(g: Graph, within: Bits) -> Bits:
    """Vertices of `within` with no neighbour inside `within`."""
    out = 0
    for v in iter_bits(within):
        if not g.adj[v] & within:
            out |= 1 << v
    return out
