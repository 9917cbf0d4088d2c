import logging
from fractions import Fraction

from ..errors import PreconditionError
from ..graph_core import Bits, Graph, bfs_tree, full_mask, induced_subgraph, is_tree, iter_bits, lowest
from ..patterns import Certificate, StarFamily
from ..solvers import tree_domination
from .common import certify, lift

logger = logging.getLogger(__name__)


def _degree(g: Graph, tree: Bits, v: int) -> int:
    return (g.adj[v] & tree).bit_count()


def _is_star_k(g: Graph, tree: Bits, k: int) -> bool:
    """g[tree] is K_{1,k+1}."""
    if tree.bit_count() != k + 2:
        return False
    return any(_degree(g, tree, v) == k + 1 for v in iter_bits(tree))


def tree_k_bits(g: Graph, tree: Bits, k: int) -> Bits:
    """K_{1,k+1}-isolating set of the tree g[tree] with at most |tree|/(k+3) vertices.

    Children are handled before parents. A vertex whose uncut subtree reaches k+3
    vertices is taken and its subtree cut off: every child subtree left under it
    has at most k+2 vertices, so removing the children leaves pieces of maximum
    degree at most k. The uncut part around the root has at most k+2 vertices and,
    once anything was cut, contains a dominated vertex.
    """
    root = lowest(tree)
    bfs = bfs_tree(g, root, within=tree)
    size = {v: 1 for v in bfs.order}
    chosen = 0
    for v in reversed(bfs.order):
        if size[v] >= k + 3:
            chosen |= 1 << v
            size[v] = 0
        if v != root:
            size[bfs.parent[v]] += size[v]
    logger.debug("tree k=%d: took %d of %d vertices", k, chosen.bit_count(), tree.bit_count())
    return chosen


def tree_k_isolating(t: Graph, k: int) -> Certificate:
    if not is_tree(t):
        raise PreconditionError("tree_k_isolating needs a tree")
    if _is_star_k(t, full_mask(t.n), k):
        raise PreconditionError(f"K_1,{k + 1} is excluded")
    chosen = tree_k_bits(t, full_mask(t.n), k)
    return certify(t, chosen, "tree", Fraction(t.n // (k + 3)), family=StarFamily(k=k))


def equal_degree_tree_isolating(t: Graph, k: int, r: int) -> Certificate:
    """Minimum dominating set of the tree minus its leaves.

    Promises (n-2)/(2(r-1)); a star has a single inner vertex and is promised 1.
    """
    if not is_tree(t):
        raise PreconditionError("equal_degree_tree_isolating needs a tree")
    if r < k + 3:
        raise PreconditionError(f"inner degree r={r} must be at least k+3={k + 3}")
    inner = sum(1 << v for v in range(t.n) if t.degree(v) > 1)
    if not inner:
        raise PreconditionError("tree has no inner vertex")
    bad = [v for v in iter_bits(inner) if t.degree(v) != r]
    if bad:
        raise PreconditionError(f"inner vertices {bad} do not have degree {r}")
    core, keep = induced_subgraph(t, inner)
    _, dom = tree_domination(core)
    chosen = lift(keep, dom.bits)
    bound = Fraction(1) if inner.bit_count() == 1 else Fraction(t.n - 2, 2 * (r - 1))
    return certify(t, chosen, "equal-degree-tree", bound, family=StarFamily(k=k))
