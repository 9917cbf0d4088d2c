"""Seeded randomized isolating sets.

Randomness comes from numpy's PCG64 bit generator seeded with the caller's integer,
so a (graph, seed) pair always reproduces the same set. One uniform draw is taken
per vertex in index order.
"""

import logging
import math

import numpy as np

from ..errors import PreconditionError, StructureError
from ..graph_core import (
    Bits,
    Graph,
    bipartition_bits,
    closed_neighborhood_bits,
    full_mask,
    isolated_vertices_bits,
    iter_bits,
)
from ..patterns import Certificate
from ..seeding import make_rng
from ..solvers import half_dominating_bits
from .common import certify

logger = logging.getLogger(__name__)


def sampling_probability(delta: int) -> float:
    """p = ln(delta+1) / (delta+1)."""
    return math.log(delta + 1) / (delta + 1)


def bipartite_sampling_probability(delta: int) -> float:
    """p = 1 - (1/delta)^(1/(delta-1)); 1/2 at delta = 1 where the exponent is undefined."""
    if delta == 1:
        return 0.5
    return 1.0 - (1.0 / delta) ** (1.0 / (delta - 1))


def _sample(rng: np.random.Generator, n: int, p: float, among: Bits) -> Bits:
    draws = rng.random(n)
    out = 0
    for v in iter_bits(among):
        if draws[v] < p:
            out |= 1 << v
    return out


def randomized_isolating(g: Graph, seed: int) -> Certificate:
    """A sampled at rate ln(delta+1)/(delta+1), then a half-size dominating set of what is left.

    I is the set of isolated vertices of g - N[A]; B = V - N[A] - I has no isolated vertex,
    so it has a dominating set with at most |B|/2 vertices. Always valid; the size bound
    holds in expectation only.
    """
    delta = g.min_degree()
    if g.n == 0 or delta == 0:
        raise PreconditionError("randomized_isolating needs minimum degree at least 1")
    p = sampling_probability(delta)
    a = _sample(make_rng(seed), g.n, p, full_mask(g.n))
    left = full_mask(g.n) & ~closed_neighborhood_bits(g, a)
    b = left & ~isolated_vertices_bits(g, left)
    d = half_dominating_bits(g, b) if b else 0
    logger.debug(
        "random isolation seed=%d p=%.4f |A|=%d |B|=%d |D|=%d", seed, p, a.bit_count(), b.bit_count(), d.bit_count()
    )
    return certify(g, a | d, "random", None, note=f"seed={seed}")


def randomized_bipartite_isolating(g: Graph, seed: int) -> Certificate:
    """A sampled from the smaller side V1; B = vertices of V2 without a neighbour in A."""
    parts = bipartition_bits(g)
    if parts is None:
        raise StructureError("randomized_bipartite_isolating needs a bipartite graph")
    delta = g.min_degree()
    if g.n == 0 or delta == 0:
        raise PreconditionError("randomized_bipartite_isolating needs minimum degree at least 1")
    first, second = parts
    v1, v2 = (first, second) if first.bit_count() <= second.bit_count() else (second, first)
    p = bipartite_sampling_probability(delta)
    a = _sample(make_rng(seed), g.n, p, v1)
    b = v2 & ~closed_neighborhood_bits(g, a)
    return certify(g, a | b, "random-bipartite", None, note=f"seed={seed}")
