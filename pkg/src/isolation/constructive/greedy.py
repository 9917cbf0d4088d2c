import logging
from fractions import Fraction

from ..errors import PreconditionError
from ..graph_core import Graph, VertexSet, closed_neighborhood_bits, full_mask, iter_bits
from ..patterns import Certificate, ExplicitFamily, StarFamily, find_subgraph
from .common import certify

logger = logging.getLogger(__name__)


def greedy_pattern_removal(g: Graph, h: Graph, h_dominating: VertexSet) -> Certificate:
    """{h}-isolating set: while a copy of h survives, take the image of h_dominating and delete the copy.

    Promises |h_dominating| * floor(n / n(h)).
    """
    if h.n == 0:
        raise PreconditionError("pattern needs at least one vertex")
    if h_dominating.n != h.n or closed_neighborhood_bits(h, h_dominating.bits) != full_mask(h.n):
        raise PreconditionError(f"{h_dominating} does not dominate the pattern")
    cur = full_mask(g.n)
    chosen = 0
    copies = 0
    while (image := find_subgraph(g, cur, h)) is not None:
        for p in iter_bits(h_dominating.bits):
            chosen |= 1 << image[p]
        for v in image:
            cur &= ~(1 << v)
        copies += 1
    logger.debug("greedy removal took %d copies of a %d-vertex pattern", copies, h.n)
    bound = Fraction(len(h_dominating) * (g.n // h.n))
    return certify(g, chosen, "greedy", bound, family=ExplicitFamily(patterns=(h,)))


def greedy_star_removal(g: Graph, k: int) -> Certificate:
    """Star specialisation: take any vertex of current degree at least k+1 and delete it with k+1 neighbours.

    Promises floor(n / (k+2)).
    """
    cur = full_mask(g.n)
    chosen = 0
    progress = True
    while progress:
        progress = False
        for v in iter_bits(cur):
            nv = g.adj[v] & cur
            if nv.bit_count() > k:
                chosen |= 1 << v
                cur &= ~(1 << v)
                for i, u in enumerate(iter_bits(nv)):
                    if i == k + 1:
                        break
                    cur &= ~(1 << u)
                progress = True
                break
    return certify(g, chosen, "greedy-star", Fraction(g.n // (k + 2)), family=StarFamily(k=k))
