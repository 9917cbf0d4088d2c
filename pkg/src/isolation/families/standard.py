"""Standard graphs and seeded random generators.

Vertex orders:
  path, cycle       0-1-...-(n-1) (and back to 0 for the cycle)
  complete_bipartite  side A = 0..p-1, side B = p..p+q-1
  star              center 0, leaves 1..r
  petersen          outer 5-cycle 0..4, inner pentagram 5..9, spoke i ~ i+5
  hypercube         u ~ u xor 2^b
  fan_triangulation apex 0 joined to the path 1..n-1; outer cycle 0..n-1
  grid              (i, j) at i * t + j, rows of length t
"""

import heapq
import logging
from typing import Literal

import numpy as np

from ..errors import ParameterError
from ..graph_core import Graph, cartesian_product
from ..seeding import make_rng

logger = logging.getLogger(__name__)

GridKind = Literal["torus", "cylinder", "grid"]

PAIRING_TRIES = 1000


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def empty(n: int) -> Graph:
    if n < 0:
        raise ParameterError(f"empty graph needs n >= 0, got {n}")
    return Graph.empty(n)


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise ParameterError(f"K_p,q needs p, q >= 1, got {p}, {q}")
    return Graph.from_edges(p + q, ((a, p + b) for a in range(p) for b in range(q)))


def star(r: int) -> Graph:
    if r < 1:
        raise ParameterError(f"star K_1,r needs r >= 1, got {r}")
    return complete_bipartite(1, r)


def petersen() -> Graph:
    outer = ((i, (i + 1) % 5) for i in range(5))
    inner = ((5 + i, 5 + (i + 2) % 5) for i in range(5))
    spokes = ((i, i + 5) for i in range(5))
    return Graph.from_edges(10, [*outer, *inner, *spokes])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ParameterError(f"hypercube needs d >= 0, got {d}")
    n = 1 << d
    return Graph.from_edges(n, ((u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree decoded from a seeded Pruefer sequence."""
    if n < 1:
        raise ParameterError(f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    code = [int(x) for x in make_rng(seed).integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_regular(n: int, d: int, seed: int, tries: int = PAIRING_TRIES) -> Graph:
    """d-regular graph from the pairing model, rejecting pairings with loops or repeated edges.

    Practical for small d only: the acceptance rate decays like exp(-(d^2-1)/4).
    """
    if n < 1 or d < 0 or d >= n or (n * d) % 2:
        raise ParameterError(f"no simple {d}-regular graph on {n} vertices")
    rng = make_rng(seed)
    points = np.repeat(np.arange(n), d)
    for attempt in range(tries):
        pairs = rng.permutation(points).reshape(-1, 2)
        seen: set[tuple[int, int]] = set()
        for a, b in pairs:
            u, v = int(min(a, b)), int(max(a, b))
            if u == v or (u, v) in seen:
                break
            seen.add((u, v))
        else:
            logger.debug("pairing model accepted after %d attempts", attempt + 1)
            return Graph.from_edges(n, sorted(seen))
    raise ParameterError(f"pairing model found no simple {d}-regular graph on {n} vertices in {tries} tries")


def fan_triangulation(n: int) -> Graph:
    if n < 3:
        raise ParameterError(f"fan needs n >= 3, got {n}")
    spokes = ((0, v) for v in range(1, n))
    rim = ((v, v + 1) for v in range(1, n - 1))
    return Graph.from_edges(n, [*spokes, *rim])


def random_polygon_triangulation(n: int, seed: int) -> Graph:
    """Maximal outerplanar graph: polygon 0..n-1 triangulated by clipping random ears."""
    if n < 3:
        raise ParameterError(f"polygon needs n >= 3, got {n}")
    rng = make_rng(seed)
    edges = [(i, (i + 1) % n) for i in range(n)]
    polygon = list(range(n))
    while len(polygon) > 3:
        i = int(rng.integers(0, len(polygon)))
        edges.append((polygon[i - 1], polygon[(i + 1) % len(polygon)]))
        del polygon[i]
    return Graph.from_edges(n, edges)


def grid(kind: GridKind, s: int, t: int) -> Graph:
    """C_s x C_t (torus), P_s x C_t (cylinder) or P_s x P_t (grid)."""
    match kind:
        case "torus":
            return cartesian_product(cycle(s), cycle(t))
        case "cylinder":
            return cartesian_product(path(s), cycle(t))
        case "grid":
            return cartesian_product(path(s), path(t))
    raise ParameterError(f"unknown grid kind {kind!r}")
