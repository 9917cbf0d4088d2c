"""Extremal constructions: graphs on which a bound is attained.

Each generator documents its vertex layout; new vertices are always appended after
the vertices of any input graph, so input indices are preserved.
"""

import logging
from typing import Literal

from ..errors import ParameterError
from ..graph_core import (
    Graph,
    complement,
    disjoint_union,
    is_connected,
    is_maximal_outerplanar,
)
from .standard import complete, cycle, fan_triangulation, path, star

logger = logging.getLogger(__name__)

CoronaMode = Literal["one_edge", "two_edges"]
ComposeMode = Literal["delta1", "delta_ge2"]


def _edges_of(g: Graph, offset: int = 0) -> list[tuple[int, int]]:
    return [(u + offset, v + offset) for u, v in g.edges()]


def corona_k2(h: Graph, mode: CoronaMode) -> Graph:
    """h with a K_2 hung on every vertex i: K_2 at m+2i, m+2i+1 (m = n(h)).

    one_edge joins i to m+2i; two_edges joins i to both ends, forming a triangle.
    """
    if mode not in ("one_edge", "two_edges"):
        raise ParameterError(f"unknown corona mode {mode!r}")
    m = h.n
    if m < 1:
        raise ParameterError("corona needs a non-empty base graph")
    if not is_connected(h):
        raise ParameterError("corona base must be connected")
    edges = _edges_of(h)
    for i in range(m):
        a, b = m + 2 * i, m + 2 * i + 1
        edges.append((a, b))
        edges.append((i, a))
        if mode == "two_edges":
            edges.append((i, b))
    return Graph.from_edges(3 * m, edges)


def f_rst(r: int, s: int, t: int) -> Graph:
    """r K_3, then s P_3, then t C_6."""
    if min(r, s, t) < 0 or r + s + t < 1:
        raise ParameterError(f"F_r,s,t needs non-negative counts with a positive sum, got {r}, {s}, {t}")
    parts = [complete(3)] * r + [path(3)] * s + [cycle(6)] * t
    return disjoint_union(*parts)


def kr_minus_hamiltonian(r: int) -> Graph:
    """K_r without the Hamiltonian cycle 0-1-...-(r-1)-0; (r-3)-regular."""
    if r < 4:
        raise ParameterError(f"K_r - C_r needs r >= 4, got {r}")
    return complement(cycle(r))


def compose_general(h: Graph, hook: int, gstar: Graph, mode: ComposeMode) -> Graph:
    """t = n(gstar) copies of h, copy i at i*n(h), its hook joined to gstar vertex t*n(h)+i."""
    if not 0 <= hook < h.n:
        raise ParameterError(f"hook {hook} is not a vertex of the {h.n}-vertex pattern")
    if gstar.n < 1 or not is_connected(gstar):
        raise ParameterError("the connecting graph must be connected and non-empty")
    match mode:
        case "delta1":
            if h.min_degree() != 1:
                raise ParameterError("delta1 composition needs a pattern of minimum degree 1")
            if not any(h.degree(v) == 1 for v in range(h.n) if v != hook):
                raise ParameterError(f"pattern minus hook {hook} keeps no vertex of degree 1")
        case "delta_ge2":
            if gstar.min_degree() < 1 or h.min_degree() < gstar.min_degree() + 1:
                raise ParameterError("delta_ge2 composition needs delta(h) >= delta(gstar) + 1 >= 2")
        case _:
            raise ParameterError(f"unknown composition mode {mode!r}")
    t, size = gstar.n, h.n
    base = t * size
    edges = []
    for i in range(t):
        edges.extend(_edges_of(h, i * size))
        edges.append((i * size + hook, base + i))
    edges.extend(_edges_of(gstar, base))
    return Graph.from_edges(base + t, edges)


def path_of_stars(t: int, k: int) -> Graph:
    """Path 0..t-1; copy i of K_1,k+1 at t + i(k+2) (center first), v_i joined to its first leaf."""
    if t < 1 or k < 0:
        raise ParameterError(f"path of stars needs t >= 1 and k >= 0, got {t}, {k}")
    width = k + 2
    edges = [(i, i + 1) for i in range(t - 1)]
    for i in range(t):
        center = t + i * width
        edges.extend((center, center + j) for j in range(1, width))
        edges.append((i, center + 1))
    return Graph.from_edges(t * (k + 3), edges)


def equal_degree_caterpillar(t: int, r: int) -> Graph:
    """Path x_1..x_t at 0..t-1; each inner x_i gets a pendant v_i filled up with r-1 leaves
    and r-3 leaves of its own, so every non-leaf has degree r and n = 2(t-2)(r-1) + 2.
    """
    if t < 3 or r < 3:
        raise ParameterError(f"caterpillar needs t >= 3 and r >= 3, got {t}, {r}")
    edges = [(i, i + 1) for i in range(t - 1)]
    nxt = t
    for x in range(1, t - 1):
        v = nxt
        edges.append((x, v))
        nxt += 1
        for _ in range(r - 1):
            edges.append((v, nxt))
            nxt += 1
        for _ in range(r - 3):
            edges.append((x, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def _has_outer_cycle(g: Graph) -> bool:
    return all(g.has_edge(i, (i + 1) % g.n) for i in range(g.n))


def outerplanar_sharp(p: int, base: Graph | None = None) -> Graph:
    """Maximal outerplanar graph on 4p vertices with isolation number p.

    base is maximal outerplanar on 2p vertices with outer cycle 0..2p-1 (a fan by
    default). w_i = 2p + i; edges v_i w_i and, per pair (a, b) = (2j, 2j+1),
    v_a w_b and w_a w_b.
    """
    if p < 2:
        raise ParameterError(f"outerplanar construction needs p >= 2, got {p}")
    base = fan_triangulation(2 * p) if base is None else base
    if base.n != 2 * p or not is_maximal_outerplanar(base) or not _has_outer_cycle(base):
        raise ParameterError(f"base must be maximal outerplanar on {2 * p} vertices with outer cycle 0..{2 * p - 1}")
    w = 2 * p
    edges = _edges_of(base)
    for i in range(2 * p):
        edges.append((i, w + i))
    for a in range(0, 2 * p, 2):
        edges.append((a, w + a + 1))
        edges.append((w + a, w + a + 1))
    return Graph.from_edges(4 * p, edges)


def lb_equality_bipartite(t: int, delta_cap: int) -> Graph:
    """Bipartite graph meeting iota >= d n / (2 Delta^2) with equality; iota = t.

    Side A: a_{i,j} = i*Delta + j (t*Delta vertices). Hubs s_i = t*Delta + i with
    N(s_i) = {a_{i,0}, ..., a_{i,Delta-1}}. The other B vertices b = 0..t(Delta-1)-1
    sit at t*Delta + t + b; a takes the Delta-1 consecutive b starting at a(Delta-1)
    mod t(Delta-1). Every vertex ends with degree Delta.
    """
    if t < 1 or delta_cap < 1:
        raise ParameterError(f"equality family needs t >= 1 and Delta >= 1, got {t}, {delta_cap}")
    d = delta_cap
    size_a = t * d
    extra = t * (d - 1)
    hubs = size_a
    others = size_a + t
    edges = []
    for i in range(t):
        edges.extend((hubs + i, i * d + j) for j in range(d))
    for a in range(size_a):
        start = a * (d - 1)
        edges.extend((a, others + (start + h) % extra) for h in range(d - 1))
    return Graph.from_edges(size_a + t + extra, edges)


def star_lower_sharp(delta_cap: int, k: int) -> Graph:
    """Hub 0 joined to the first vertex of each of Delta cliques K_{k+1} (clique c at 1 + c(k+1))."""
    if delta_cap < 1 or k < 0:
        raise ParameterError(f"needs Delta >= 1 and k >= 0, got {delta_cap}, {k}")
    size = k + 1
    edges = []
    for c in range(delta_cap):
        first = 1 + c * size
        edges.append((0, first))
        edges.extend((first + x, first + y) for x in range(size) for y in range(x + 1, size))
    return Graph.from_edges(1 + delta_cap * size, edges)


def subdivided_star(p: int, q: int) -> Graph:
    """K_1,2p+q with 2p edges subdivided and the subdivision ends paired.

    Center 0, subdivision vertices 1..2p, their ends 2p+1..4p (end 2p+1+i behind
    1+i, ends paired 2j/2j+1 in that order), plain leaves 4p+1..4p+q.
    """
    if p < 1 or q < 0:
        raise ParameterError(f"subdivided star needs p >= 1 and q >= 0, got {p}, {q}")
    edges = []
    for i in range(2 * p):
        mid, end = 1 + i, 2 * p + 1 + i
        edges.append((0, mid))
        edges.append((mid, end))
    for j in range(p):
        edges.append((2 * p + 1 + 2 * j, 2 * p + 2 + 2 * j))
    edges.extend((0, 4 * p + 1 + i) for i in range(q))
    return Graph.from_edges(1 + 4 * p + q, edges)


def disjoint_copies(g: Graph, c: int) -> Graph:
    if c < 1:
        raise ParameterError(f"need at least one copy, got {c}")
    return disjoint_union(*([g] * c))


def _matching(pairs: int) -> list[Graph]:
    return [complete(2)] * pairs


def ng_sharp_delta0(n: int) -> Graph:
    """((n-1)/2) K_2 + K_1 for odd n, ((n-2)/2) K_2 + 2 K_1 for even n."""
    if n < 1:
        raise ParameterError(f"needs n >= 1, got {n}")
    if n % 2:
        return disjoint_union(*_matching((n - 1) // 2), Graph.empty(1))
    return disjoint_union(*_matching((n - 2) // 2), Graph.empty(2))


def ng_sharp_delta1(n: int) -> Graph:
    """(n/2) K_2 for even n, ((n-3)/2) K_2 + K_1,2 for odd n."""
    if n < 2:
        raise ParameterError(f"needs n >= 2, got {n}")
    if n % 2 == 0:
        return disjoint_union(*_matching(n // 2))
    return disjoint_union(*_matching((n - 3) // 2), star(2))
