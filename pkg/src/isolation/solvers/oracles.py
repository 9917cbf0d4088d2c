"""Brute-force identities used as test and sweep oracles, never as production solvers."""

from ..graph_core import Graph, full_mask, induced_subgraph
from ..patterns import PatternFamily, is_f_free_bits
from .exact import exact_domination, exact_isolation


def decomposition_oracle(g: Graph, family: PatternFamily) -> int:
    """min over A with g[A] F-free of gamma(g - A)."""
    full = full_mask(g.n)
    best = g.n
    for a in range(1 << g.n):
        if not is_f_free_bits(g, a, family):
            continue
        rest, _ = induced_subgraph(g, full & ~a)
        best = min(best, exact_domination(rest)[0])
    return best


def partition_isolation_oracle(g: Graph, family: PatternFamily) -> int:
    """min over partitions V = A + B of iota(g[A], F) + gamma(g[B])."""
    full = full_mask(g.n)
    best = g.n
    for a in range(1 << g.n):
        part_a, _ = induced_subgraph(g, a)
        part_b, _ = induced_subgraph(g, full & ~a)
        best = min(best, exact_isolation(part_a, family)[0] + exact_domination(part_b)[0])
    return best