from ..errors import PreconditionError
from ..graph_core import Bits, Graph, VertexSet, bfs_tree, component_bits, full_mask, lowest


def half_dominating_bits(g: Graph, within: Bits | None = None) -> Bits:
    """Dominating set of g[within] with at most half its vertices.

    Per component, the smaller parity class of a BFS spanning tree: every vertex has
    a tree neighbour in the other class. g[within] must have no isolated vertex.
    """
    region = full_mask(g.n) if within is None else within
    out = 0
    for comp in component_bits(g, region):
        if comp.bit_count() == 1:
            raise PreconditionError(f"vertex {lowest(comp)} is isolated")
        tree = bfs_tree(g, lowest(comp), within=comp)
        even = odd = 0
        for v in tree.order:
            if tree.level[v] % 2:
                odd |= 1 << v
            else:
                even |= 1 << v
        out |= even if even.bit_count() <= odd.bit_count() else odd
    return out


def half_dominating_set(g: Graph) -> VertexSet:
    return VertexSet.from_bits(g.n, half_dominating_bits(g))
