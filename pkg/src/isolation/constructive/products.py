"""Explicit isolating sets of the product G x K_r and of the bipartite double B(G).

Certificates refer to the derived graph: cartesian_product(g, complete(r)) with
(v, j) at v*r + j, and bipartite_double(g) with the second copy at n..2n-1.
"""

import logging
from fractions import Fraction

from ..errors import PreconditionError
from ..families import complete
from ..graph_core import Graph, bipartite_double, cartesian_product, iter_bits
from ..patterns import Certificate, PatternFamily
from ..solvers import exact_domination, exact_isolation
from .common import certify

logger = logging.getLogger(__name__)


def product_isolating(g: Graph, r: int, family: PatternFamily) -> Certificate:
    """A minimum dominating set D of G copied into layers 0..r-2 and a minimum
    F-isolating set S of G in layer r-1.

    Promises (r-1) gamma(G) + iota(G, F).
    """
    if r < 1:
        raise PreconditionError(f"product needs r >= 1, got {r}")
    host = cartesian_product(g, complete(r))
    gamma, dom = exact_domination(g)
    iota, cert = exact_isolation(g, family)
    chosen = 0
    for v in iter_bits(dom.bits):
        for j in range(r - 1):
            chosen |= 1 << (v * r + j)
    for v in iter_bits(cert.vertices.bits):
        chosen |= 1 << (v * r + r - 1)
    logger.debug("product with K_%d: gamma=%d iota=%d", r, gamma, iota)
    return certify(host, chosen, "product", Fraction((r - 1) * gamma + iota), family=family)


def double_dominating(g: Graph) -> Certificate:
    """Both copies of a minimum dominating set of G; promises 2 gamma(G)."""
    gamma, dom = exact_domination(g)
    chosen = dom.bits | dom.bits << g.n
    return certify(bipartite_double(g), chosen, "double", Fraction(2 * gamma))
