"""Isolating sets of size at most n/3 for connected graphs other than C_5.

The search keeps a connected current vertex set, re-roots a BFS tree at its smallest
vertex on every round and either finishes or takes one vertex v together with a
set D of at least three vertices, D inside N[v] apart from vertices that can never
again see an undominated neighbour, with the current set minus D still connected.
Final patches (rest of size at most 2, or rest inducing C_5) are checked against
the current graph; a patch that fails to isolate it is a ConstructionError.
"""

import logging
from fractions import Fraction
from typing import NamedTuple

from ..errors import ConstructionError, PreconditionError
from ..graph_core import (
    Bits,
    BfsTree,
    Graph,
    bfs_tree,
    component_bits,
    full_mask,
    is_connected,
    is_cycle_bits,
    is_isomorphic_to_cycle,
    iter_bits,
    lowest,
)
from ..patterns import Certificate
from .common import certify, cycle_order

logger = logging.getLogger(__name__)


class Step(NamedTuple):
    chosen: Bits
    removed: Bits
    done: bool


def _children(tree: BfsTree) -> dict[int, list[int]]:
    kids: dict[int, list[int]] = {v: [] for v in tree.order}
    for v in tree.order[1:]:
        kids[tree.parent[v]].append(v)
    return kids


def _distance_two_on_cycle(g: Graph, cycle: Bits, x: int) -> int:
    order = cycle_order(g, cycle, x)
    return min(order[2], order[3])


def is_c5_region(g: Graph, region: Bits) -> bool:
    return region.bit_count() == 5 and is_cycle_bits(g, region)


def isolates_region(g: Graph, region: Bits, s: Bits) -> bool:
    """s leaves no edge of g[region] undominated."""
    closed = s
    for v in iter_bits(s):
        closed |= g.adj[v]
    rest = region & ~closed
    return all(not g.adj[v] & rest for v in iter_bits(rest))


def _single_isolator(g: Graph, cur: Bits, first: tuple[int, ...]) -> Bits:
    """The first vertex of `first`, then of cur by index, that alone isolates g[cur]."""
    for x in (*first, *(y for y in iter_bits(cur) if y not in first)):
        if isolates_region(g, cur, 1 << x):
            return 1 << x
    return 1 << first[0]


def _finish(g: Graph, cur: Bits, candidate: Bits, branch: str) -> Step:
    """Keep candidate if it isolates g[cur] within the n/3 budget."""
    if candidate.bit_count() <= cur.bit_count() // 3 and isolates_region(g, cur, candidate):
        logger.debug("n/3 search: %s patch %s", branch, bin(candidate))
        return Step(candidate, cur, True)
    raise ConstructionError(
        f"n/3 search: {branch} patch {sorted(iter_bits(candidate))} does not isolate {sorted(iter_bits(cur))}"
    )


def _settle(g: Graph, cur: Bits, taken: int, removed: Bits, patch: Bits | None, branch: str) -> Step:
    """Finish with patch when the rest is tiny or a C_5, else take `taken` and drop `removed`."""
    rest = cur & ~removed
    if rest.bit_count() <= 2:
        return _finish(g, cur, patch if patch is not None else 1 << taken, branch + "/small-rest")
    if is_c5_region(g, rest):
        return _finish(g, cur, patch if patch is not None else 1 << taken, branch + "/c5-rest")
    logger.debug("n/3 search: %s takes %d, drops %d vertices", branch, taken, removed.bit_count())
    return Step(1 << taken, removed, False)


def _round(g: Graph, cur: Bits) -> Step:
    root = lowest(cur)
    tree = bfs_tree(g, root, within=cur)
    depth = tree.depth
    if depth <= 1:
        return Step(1 << root, cur, True)
    kids = _children(tree)

    # a vertex whose children, at least two, are all leaves
    for u in sorted(tree.order):
        if tree.level[u] <= depth - 1 and len(kids[u]) >= 2 and not any(kids[c] for c in kids[u]):
            removed = (1 << u) | sum(1 << c for c in kids[u])
            rest = cur & ~removed
            patch = None
            if is_c5_region(g, rest):
                patch = (1 << u) | (1 << _distance_two_on_cycle(g, rest, tree.parent[u]))
            return _settle(g, cur, u, removed, patch, "leaf-star")

    # every vertex on level depth-1 now has at most one child
    u = min(v for v in tree.order if tree.level[v] == depth - 2 and any(kids[c] for c in kids[v]))
    a = kids[u]
    if len(a) == 1:
        v = a[0]
        w = kids[v][0]
        removed = (1 << u) | (1 << v) | (1 << w)
        rest = cur & ~removed
        patch = None
        if rest.bit_count() <= 2:
            patch = _single_isolator(g, cur, (v, u, w))
        elif is_c5_region(g, rest):
            x = cycle_order(g, rest, tree.parent[u])
            n_w, n_u = g.adj[w], g.adj[u]
            if not n_w >> x[4] & 1:
                patch = (1 << u) | (1 << x[2])
            elif not n_w >> x[1] & 1:
                patch = (1 << u) | (1 << x[3])
            elif not n_u >> x[3] & 1:
                patch = (1 << w) | (1 << x[1])
            else:
                patch = (1 << w) | (1 << x[3])
        return _settle(g, cur, v, removed, patch, "path")

    b = [c for x in a for c in kids[x]]
    b_bits = sum(1 << c for c in b)
    subtree = (1 << u) | sum(1 << x for x in a) | b_bits
    b2 = 0
    for c in b:
        if g.adj[c] & cur & ~subtree:
            b2 |= 1 << c
    # close B2 under adjacency inside B so that B1 never sees the rest
    frontier = b2
    while frontier:
        reach = 0
        for c in iter_bits(frontier):
            reach |= g.adj[c] & b_bits & ~b2
        b2 |= reach
        frontier = reach
    b1 = b_bits & ~b2
    b1_edge = next(((y, z) for y in iter_bits(b1) for z in iter_bits(g.adj[y] & b1)), None)

    if b1_edge is None:
        removed = subtree & ~b2
        rest = cur & ~removed
        patch = None
        if is_c5_region(g, rest):
            patch = (1 << u) | (1 << _distance_two_on_cycle(g, rest, tree.parent[u]))
        return _settle(g, cur, u, removed, patch, "independent-grandchildren")

    y, z = b1_edge
    x = tree.parent[y]
    removed = (1 << x) | (1 << y) | (1 << z)
    rest = cur & ~removed
    patch = None
    if rest.bit_count() <= 2:
        patch = 1 << x
    elif is_c5_region(g, rest):
        patch = (1 << u) | (1 << tree.parent[z])
    return _settle(g, cur, y, removed, patch, "adjacent-grandchildren")


def third_bits(g: Graph, region: Bits) -> Bits:
    """Isolating set of the connected, non-C_5 graph g[region] with at most |region|/3 vertices."""
    chosen = 0
    cur = region
    while True:
        step = _round(g, cur)
        chosen |= step.chosen
        if step.done:
            return chosen
        cur &= ~step.removed


def isolating_third(g: Graph) -> Certificate:
    if g.n < 3:
        raise PreconditionError("isolating_third needs at least 3 vertices")
    if not is_connected(g):
        raise PreconditionError("isolating_third needs a connected graph")
    if g.n == 5 and is_isomorphic_to_cycle(g):
        raise PreconditionError("C_5 needs two vertices; use isolating_components")
    return certify(g, third_bits(g, full_mask(g.n)), "third", Fraction(g.n // 3))


def c5_pair(g: Graph, comp: Bits) -> Bits:
    """Two vertices at distance two on the 5-cycle g[comp]; they dominate it."""
    x = lowest(comp)
    return (1 << x) | (1 << _distance_two_on_cycle(g, comp, x))


def components_bits(g: Graph, region: Bits) -> Bits:
    """Isolating set of g[region] built per component; every component needs at least 3 vertices."""
    chosen = 0
    for comp in component_bits(g, region):
        if comp.bit_count() < 3:
            raise PreconditionError(f"component {sorted(iter_bits(comp))} has fewer than 3 vertices")
        chosen |= c5_pair(g, comp) if is_c5_region(g, comp) else third_bits(g, comp)
    return chosen


def isolating_components(g: Graph) -> Certificate:
    """Two vertices per C_5 component, the n/3 search elsewhere.

    Promises 2n/5 when some component is a C_5, else the sum of floor(n_i/3).
    """
    comps = component_bits(g)
    chosen = components_bits(g, full_mask(g.n))
    if any(is_c5_region(g, c) for c in comps):
        bound = Fraction(2 * g.n, 5)
    else:
        bound = Fraction(sum(c.bit_count() // 3 for c in comps))
    return certify(g, chosen, "components", bound)
