"""Backtracking subgraph matcher for small patterns and the claw-free predicate."""

from ..graph_core import Bits, Graph, VertexSet, full_mask, iter_bits, lowest


def _match_order(pattern: Graph) -> list[int]:
    """Pattern vertices by descending degree, each later vertex adjacent to an earlier one when possible."""
    remaining = set(range(pattern.n))
    order: list[int] = []
    placed = 0
    while remaining:
        attached = [p for p in remaining if pattern.adj[p] & placed]
        pool = attached or list(remaining)
        p = max(pool, key=lambda x: (pattern.degree(x), -x))
        order.append(p)
        remaining.discard(p)
        placed |= 1 << p
    return order


def find_subgraph(host: Graph, region: Bits, pattern: Graph) -> list[int] | None:
    """An injective map pattern -> region preserving pattern edges, or None.

    The returned list sends pattern vertex i to host vertex result[i].
    """
    if pattern.n == 0:
        return []
    if pattern.n > region.bit_count() or pattern.edge_count() > _edges_in(host, region):
        return None
    order = _match_order(pattern)
    pdeg = [pattern.degree(p) for p in range(pattern.n)]
    rdeg = {v: (host.adj[v] & region).bit_count() for v in iter_bits(region)}
    image = [-1] * pattern.n

    def extend(i: int, used: Bits) -> bool:
        if i == len(order):
            return True
        p = order[i]
        cand = region & ~used
        for q in iter_bits(pattern.adj[p]):
            if image[q] >= 0:
                cand &= host.adj[image[q]]
        for v in iter_bits(cand):
            if rdeg[v] < pdeg[p]:
                continue
            image[p] = v
            if extend(i + 1, used | (1 << v)):
                return True
        image[p] = -1
        return False

    return image if extend(0, 0) else None


def _edges_in(g: Graph, region: Bits) -> int:
    return sum((g.adj[v] & region).bit_count() for v in iter_bits(region)) // 2


def contains_subgraph(host: Graph, region: VertexSet | Bits, pattern: Graph) -> bool:
    """True iff host[region] has a (not necessarily induced) copy of pattern."""
    bits = region.bits if isinstance(region, VertexSet) else region
    return find_subgraph(host, bits, pattern) is not None


def find_clique(g: Graph, region: Bits, k: int) -> Bits | None:
    if k <= 0:
        return 0

    def grow(clique: Bits, cand: Bits, need: int) -> Bits | None:
        if need == 0:
            return clique
        while cand.bit_count() >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = grow(clique | low, cand & g.adj[v], need - 1)
            if found is not None:
                return found
        return None

    return grow(0, region, k)


def is_claw_free(g: Graph) -> bool:
    """No induced K_{1,3}. Induced containment, unlike the family predicates."""
    return claw_center(g) is None


def claw_center(g: Graph) -> int | None:
    """A vertex with three pairwise non-adjacent neighbours, if any."""
    for v in range(g.n):
        nv = g.adj[v]
        for a in iter_bits(nv):
            rest = nv & ~g.adj[a] & ~full_mask(a + 1)
            for b in iter_bits(rest):
                if rest & ~g.adj[b] & ~full_mask(b + 1):
                    return v
    return None


def connected_prefix(g: Graph, component: Bits, k: int) -> Bits:
    """First k vertices of a BFS of the component from its smallest vertex; always connected."""
    out = frontier = 1 << lowest(component)
    while frontier and out.bit_count() < k:
        nxt = 0
        for v in iter_bits(frontier):
            for u in iter_bits(g.adj[v] & component & ~out & ~nxt):
                if (out | nxt).bit_count() >= k:
                    break
                nxt |= 1 << u
        out |= nxt
        frontier = nxt
    return out
