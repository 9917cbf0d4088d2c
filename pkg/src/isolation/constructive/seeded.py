"""Isolating sets grown from a seed set S: S plus a cover of G - N[S]."""

import logging
from fractions import Fraction
from typing import Literal

from ..errors import PreconditionError
from ..graph_core import (
    Bits,
    Graph,
    VertexSet,
    closed_neighborhood_bits,
    component_bits,
    full_mask,
    isolated_vertices_bits,
    iter_bits,
    lowest,
)
from ..patterns import Certificate, StarFamily
from ..solvers import half_dominating_bits
from .common import certify
from .third import components_bits, is_c5_region, third_bits

logger = logging.getLogger(__name__)

SeedMode = Literal["half", "two_fifths", "third"]


def _half_cover(g: Graph, rest: Bits) -> Bits:
    """Dominating set of rest minus its isolated vertices, at most half of them."""
    b = rest & ~isolated_vertices_bits(g, rest)
    return half_dominating_bits(g, b) if b else 0


def isolating_with_seed_set(g: Graph, s: VertexSet, mode: SeedMode) -> Certificate:
    """S together with a cover of R = G - N[S].

    half       isolated vertices of R stay, a half-size dominating set covers the rest.
    two_fifths needs delta(G[R]) >= 2; C_5 components take two vertices, others n/3.
    third      needs every component of G[R] on at least 3 vertices and none a C_5.
    """
    if s.n != g.n:
        raise PreconditionError(f"seed set of width {s.n} on a graph with {g.n} vertices")
    closed = closed_neighborhood_bits(g, s.bits)
    rest = full_mask(g.n) & ~closed
    n, size_s, size_open = g.n, len(s), (closed & ~s.bits).bit_count()
    match mode:
        case "half":
            cover = _half_cover(g, rest)
            bound = Fraction(n - size_open + size_s, 2)
        case "two_fifths":
            low = [v for v in iter_bits(rest) if (g.adj[v] & rest).bit_count() < 2]
            if low:
                raise PreconditionError(f"G - N[S] has vertices of degree below 2: {low}")
            cover = components_bits(g, rest)
            bound = Fraction(2 * n - 2 * size_open + 3 * size_s, 5)
        case "third":
            comps = component_bits(g, rest)
            if any(c.bit_count() < 3 or is_c5_region(g, c) for c in comps):
                raise PreconditionError("G - N[S] has a component on fewer than 3 vertices or a C_5 component")
            cover = components_bits(g, rest)
            bound = Fraction(n - size_open + 2 * size_s, 3)
        case _:
            raise PreconditionError(f"unknown seed mode {mode!r}")
    logger.debug("seed set %s mode %s: |R|=%d, cover %d", s, mode, rest.bit_count(), cover.bit_count())
    return certify(g, s.bits | cover, f"seed-{mode}", bound)


def _max_degree_vertex(g: Graph) -> int:
    delta = g.max_degree()
    return next(v for v in range(g.n) if g.degree(v) == delta)


def max_degree_half(g: Graph) -> Certificate:
    """{x} plus a half-size dominating set of G - N[x] without its isolated vertices; x of maximum degree.

    Promises (n - Delta + 1)/2.
    """
    if g.n == 0:
        raise PreconditionError("max_degree_half needs at least one vertex")
    x = _max_degree_vertex(g)
    rest = full_mask(g.n) & ~closed_neighborhood_bits(g, 1 << x)
    chosen = (1 << x) | _half_cover(g, rest)
    return certify(g, chosen, "max-degree-half", Fraction(g.n - g.max_degree() + 1, 2))


def one_isolation_via_partition(g: Graph) -> Certificate:
    """K_1,2-isolating set around a vertex v of maximum degree.

    Components of G - N[v] with at most two vertices need nothing, a C_5 component
    needs one vertex (it leaves a single edge), every other component is isolated
    within a third of its order. Promises (n - Delta + 2)/3.
    """
    if g.max_degree() < 1:
        raise PreconditionError("one_isolation_via_partition needs at least one edge")
    v = _max_degree_vertex(g)
    rest = full_mask(g.n) & ~closed_neighborhood_bits(g, 1 << v)
    chosen = 1 << v
    for comp in component_bits(g, rest):
        if comp.bit_count() <= 2:
            continue
        chosen |= 1 << lowest(comp) if is_c5_region(g, comp) else third_bits(g, comp)
    bound = Fraction(g.n - g.max_degree() + 2, 3)
    return certify(g, chosen, "one-partition", bound, family=StarFamily(k=1))
