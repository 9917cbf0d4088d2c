"""Exact domination number of a forest by leaf-up dynamic programming."""

import logging

from ..errors import StructureError
from ..graph_core import Graph, VertexSet, bfs_tree, component_bits, is_forest, lowest

logger = logging.getLogger(__name__)

INF = 1 << 30

# per-vertex states
IN, DOMINATED, OPEN = 0, 1, 2


def tree_domination(g: Graph) -> tuple[int, VertexSet]:
    """gamma of a forest with a minimum dominating set.

    States per vertex of a rooted component: IN (in the set), DOMINATED (outside,
    dominated by a child), OPEN (outside, left for its parent to dominate).
    """
    if not is_forest(g):
        raise StructureError("tree_domination needs a forest")
    chosen = 0
    for comp in component_bits(g):
        tree = bfs_tree(g, lowest(comp), within=comp)
        kids: dict[int, list[int]] = {v: [] for v in tree.order}
        for v in tree.order[1:]:
            kids[tree.parent[v]].append(v)
        cost: dict[int, tuple[int, int, int]] = {}
        for v in reversed(tree.order):
            cs = kids[v]
            take = 1 + sum(min(cost[c]) for c in cs)
            base = sum(min(cost[c][IN], cost[c][DOMINATED]) for c in cs)
            if cs:
                extra = min(cost[c][IN] - min(cost[c][IN], cost[c][DOMINATED]) for c in cs)
                dominated = base + extra
            else:
                dominated = INF
            open_ = sum(cost[c][DOMINATED] for c in cs)
            cost[v] = (take, min(dominated, INF), min(open_, INF))

        root_cost = cost[tree.root]
        state = {tree.root: IN if root_cost[IN] <= root_cost[DOMINATED] else DOMINATED}
        for v in tree.order:
            s = state[v]
            if s == IN:
                chosen |= 1 << v
            cs = kids[v]
            if s == IN:
                for c in cs:
                    state[c] = min((IN, DOMINATED, OPEN), key=lambda x: (cost[c][x], x))
            elif s == DOMINATED:
                picks = {c: (IN if cost[c][IN] <= cost[c][DOMINATED] else DOMINATED) for c in cs}
                if all(p != IN for p in picks.values()):
                    best = min(cs, key=lambda c: (cost[c][IN] - cost[c][DOMINATED], c))
                    picks[best] = IN
                state.update(picks)
            else:
                for c in cs:
                    state[c] = DOMINATED
    size = chosen.bit_count()
    logger.debug("forest domination on %d vertices: %d", g.n, size)
    return size, VertexSet.from_bits(g.n, chosen)
