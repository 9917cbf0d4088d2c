"""Helpers shared by the constructive algorithms."""

import logging
from fractions import Fraction

from ..errors import ConstructionError
from ..graph_core import Bits, Graph, VertexSet, iter_bits, remainder_bits
from ..patterns import ISOLATION, Certificate, PatternFamily, is_f_free_bits

logger = logging.getLogger(__name__)


def is_isolating(g: Graph, s: Bits, family: PatternFamily = ISOLATION) -> bool:
    return is_f_free_bits(g, remainder_bits(g, s), family)


def certify(
    g: Graph,
    s: Bits,
    producer: str,
    bound: Fraction | None,
    family: PatternFamily = ISOLATION,
    note: str = "",
    enforce_bound: bool = True,
) -> Certificate:
    """Wrap s in a Certificate after checking it; a failed check is a ConstructionError.

    With enforce_bound=False a set above its bound is returned as is, so the
    overshoot stays visible to check_certificate.
    """
    cert = Certificate(
        vertices=VertexSet.from_bits(g.n, s),
        family=family,
        producer=producer,
        promised_bound=bound,
        note=note,
    )
    if not is_isolating(g, s, family):
        raise ConstructionError(f"{producer} produced a set that does not isolate: {cert.vertices}")
    if bound is not None and cert.size > bound:
        if not enforce_bound:
            logger.warning("%s produced %d vertices, above its bound %s", producer, cert.size, bound)
            return cert
        raise ConstructionError(f"{producer} produced {cert.size} vertices, above its bound {bound}")
    return cert


def lift(keep: list[int], s: Bits) -> Bits:
    """Map a set of an induced subgraph back to the host through the index map `keep`."""
    out = 0
    for i in iter_bits(s):
        out |= 1 << keep[i]
    return out


def cycle_order(g: Graph, region: Bits, start: int) -> list[int]:
    """Vertices of the cycle g[region] walked from start towards its smaller neighbour."""
    order = [start]
    prev, cur = -1, start
    while True:
        step = min(u for u in iter_bits(g.adj[cur] & region) if u != prev)
        if step == start:
            return order
        order.append(step)
        prev, cur = cur, step
