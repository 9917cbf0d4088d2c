"""Exact exponential solvers: isolation, domination, k-independence and F-free independence.

Minimisation searches decide vertices from the highest index down, excluding before
including, so the first set found of a given size is the numerically smallest one.
A node is pruned when some part of the remainder can no longer be reached by the
undecided vertices 0..v-1 and already violates the target.
"""

import logging
from collections.abc import Callable
from fractions import Fraction

from ..graph_core import Bits, Graph, VertexSet, full_mask, iter_bits
from ..patterns import Certificate, PatternFamily, is_f_free_bits

logger = logging.getLogger(__name__)


def _prefix_closed(g: Graph) -> list[Bits]:
    """prefix[v] = N[{0, ..., v-1}]."""
    out = [0] * (g.n + 1)
    for v in range(g.n):
        out[v + 1] = out[v] | g.adj[v] | (1 << v)
    return out


def _smallest_cover(g: Graph, size: int, violates: Callable[[Bits], bool], prefix: list[Bits]) -> Bits | None:
    """Numerically smallest S with |S| = size whose remainder does not violate."""
    full = full_mask(g.n)
    adj = g.adj

    def dfs(v: int, s: Bits, closed: Bits, budget: int) -> Bits | None:
        free = full & ~closed
        if budget == 0:
            return None if violates(free) else s
        if budget > v or violates(free & ~prefix[v]):
            return None
        u = v - 1
        found = dfs(u, s, closed, budget)
        if found is not None:
            return found
        return dfs(u, s | (1 << u), closed | adj[u] | (1 << u), budget - 1)

    return dfs(g.n, 0, 0, size)


def _family_violation(g: Graph, family: PatternFamily) -> Callable[[Bits], bool]:
    return lambda region: not is_f_free_bits(g, region, family)


def isolating_set_of_size(g: Graph, family: PatternFamily, size: int) -> VertexSet | None:
    """Numerically smallest F-isolating set with exactly `size` vertices, if one exists."""
    found = _smallest_cover(g, size, _family_violation(g, family), _prefix_closed(g))
    return None if found is None else VertexSet.from_bits(g.n, found)


def exact_isolation(g: Graph, family: PatternFamily) -> tuple[int, Certificate]:
    """Minimum F-isolating set, numerically smallest witness as tie-break."""
    violates = _family_violation(g, family)
    prefix = _prefix_closed(g)
    for size in range(g.n + 1):
        found = _smallest_cover(g, size, violates, prefix)
        logger.debug("isolation search %s size %d: %s", family.label, size, "hit" if found is not None else "miss")
        if found is not None:
            cert = Certificate(
                vertices=VertexSet.from_bits(g.n, found),
                family=family,
                producer="exact",
                promised_bound=Fraction(size),
            )
            return size, cert
    raise AssertionError("the whole vertex set isolates")


def exact_domination(g: Graph) -> tuple[int, VertexSet]:
    """gamma(g) with the numerically smallest minimum dominating set."""
    prefix = _prefix_closed(g)
    for size in range(g.n + 1):
        found = _smallest_cover(g, size, lambda region: region != 0, prefix)
        if found is not None:
            return size, VertexSet.from_bits(g.n, found)
    raise AssertionError("the whole vertex set dominates")


def _largest_feasible(n: int, admits: Callable[[Bits, int], bool]) -> tuple[int, Bits]:
    """Largest A (numerically smallest among the largest) built by `admits(A, u)` extensions.

    `admits` must describe a hereditary property.
    """

    def dfs(v: int, a: Bits, budget: int) -> Bits | None:
        if budget == 0:
            return a
        if budget > v:
            return None
        u = v - 1
        found = dfs(u, a, budget)
        if found is not None:
            return found
        if admits(a, u):
            return dfs(u, a | (1 << u), budget - 1)
        return None

    for size in range(n, -1, -1):
        found = dfs(n, 0, size)
        if found is not None:
            return size, found
    return 0, 0


def exact_k_independence(g: Graph, k: int) -> tuple[int, VertexSet]:
    """alpha_k(g): largest A with max degree of g[A] at most k."""
    adj = g.adj

    def admits(a: Bits, u: int) -> bool:
        inside = adj[u] & a
        if inside.bit_count() > k:
            return False
        return all((adj[w] & a).bit_count() < k for w in iter_bits(inside))

    size, found = _largest_feasible(g.n, admits)
    return size, VertexSet.from_bits(g.n, found)


def exact_independence_family(g: Graph, family: PatternFamily) -> tuple[int, VertexSet]:
    """alpha(g, F): largest A with g[A] F-free."""
    size, found = _largest_feasible(g.n, lambda a, u: is_f_free_bits(g, a | (1 << u), family))
    return size, VertexSet.from_bits(g.n, found)
