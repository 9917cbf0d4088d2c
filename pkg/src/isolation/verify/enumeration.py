"""Exhaustive enumeration of small graphs.

A labelled graph on n vertices is an adjacency mask over the n(n-1)/2 pairs in
graph6 order: pair p = (i, j), i < j, with j ascending and then i ascending.
Up to isomorphism, graphs are represented by their canonical mask, the minimum
mask over all relabellings that keep the degree-refinement cells in order.
"""

import itertools
import logging
from collections.abc import Iterator
from functools import cache

from ..errors import GraphSizeError, ParameterError
from ..graph_core import Graph, is_connected

logger = logging.getLogger(__name__)

MAX_ORDER = 7


@cache
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


@cache
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: p for p, pair in enumerate(pairs(n))}


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for p, (i, j) in enumerate(pairs(n)):
        if mask >> p & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph.from_adjacency(adj, validate=False)


def mask_of(g: Graph) -> int:
    index = _pair_index(g.n)
    return sum(1 << index[e] for e in g.edges())


def _cells(g: Graph) -> list[list[int]]:
    """Vertices grouped by (degree, sorted neighbour degrees), groups in invariant order."""
    degrees = g.degrees()
    key = {v: (degrees[v], tuple(sorted(degrees[u] for u in g.neighbors(v)))) for v in range(g.n)}
    groups: dict[tuple, list[int]] = {}
    for v in sorted(range(g.n), key=lambda v: key[v]):
        groups.setdefault(key[v], []).append(v)
    return list(groups.values())


def canonical_mask(g: Graph) -> int:
    index = _pair_index(g.n)
    edges = list(g.edges())
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in _cells(g))):
        pos = {v: label for label, v in enumerate(itertools.chain.from_iterable(parts))}
        mask = 0
        for u, v in edges:
            a, b = sorted((pos[u], pos[v]))
            mask |= 1 << index[a, b]
        if best is None or mask < best:
            best = mask
    return best or 0


def _check_order(n: int) -> None:
    if n < 0:
        raise ParameterError(f"graph order must be non-negative, got {n}")
    if n > MAX_ORDER:
        raise GraphSizeError(f"exhaustive enumeration stops at n = {MAX_ORDER}, got {n}; sample instead")


@cache
def canonical_masks(n: int) -> tuple[int, ...]:
    """Canonical masks of all graphs on n vertices up to isomorphism, ascending.

    Grown from the graphs on n-1 vertices by adding vertex n-1 with every possible
    neighbourhood.
    """
    _check_order(n)
    if n <= 1:
        return (0,)
    found: set[int] = set()
    for base in canonical_masks(n - 1):
        adj = list(graph_from_mask(n - 1, base).adj) + [0]
        for hood in range(1 << (n - 1)):
            grown = [nv | ((hood >> v & 1) << (n - 1)) for v, nv in enumerate(adj[:-1])] + [hood]
            found.add(canonical_mask(Graph.from_adjacency(grown, validate=False)))
    logger.debug("n=%d: %d graphs up to isomorphism", n, len(found))
    return tuple(sorted(found))


def enumerate_graphs(n: int, connected_only: bool = False, dedup: bool = False) -> Iterator[Graph]:
    """Every graph on n vertices: all 2^(n(n-1)/2) labelled ones, or one per isomorphism class."""
    _check_order(n)
    masks = canonical_masks(n) if dedup else range(1 << pair_count(n))
    for mask in masks:
        g = graph_from_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g
