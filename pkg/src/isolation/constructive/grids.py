"""Isolating sets of tori C_s x C_t, cylinders P_s x C_t and grids P_s x P_t.

Vertices are (i, j) with 1 <= i <= s, 1 <= j <= t at index (i-1)*t + (j-1). The
printed construction takes rows and columns congruent to 1 and to 3 mod 4 plus
boundary rows depending on the residues of s and t. Off the sharp residues it
may leave edges or carry redundant vertices, so every candidate goes through a
greedy repair and a prune; the diagonal patterns shifted by parity and by 2 are
candidates too. When no candidate fits the printed upper bound, small boards
get an exact search of that size; otherwise the smallest candidate is returned
marked as exceeding the bound.
"""

import logging
import math
from collections.abc import Callable
from fractions import Fraction

from ..bounds import grid_bounds
from ..errors import PreconditionError
from ..families import GridKind, grid
from ..graph_core import Bits, Graph, closed_neighborhood_bits, full_mask, iter_bits
from ..patterns import ISOLATION, Certificate
from ..solvers import isolating_set_of_size
from .common import certify, is_isolating

logger = logging.getLogger(__name__)

# Boards above this order skip the exact search when no pattern fits the bound.
EXACT_SEARCH_MAX_N = 36


def _cells(s: int, t: int, keep: Callable[[int, int], bool]) -> Bits:
    out = 0
    for i in range(1, s + 1):
        for j in range(1, t + 1):
            if keep(i, j):
                out |= 1 << ((i - 1) * t + (j - 1))
    return out


def printed_set(kind: GridKind, s: int, t: int) -> Bits:
    base = _cells(s, t, lambda i, j: (i % 4 == 1 and j % 4 == 1) or (i % 4 == 3 and j % 4 == 3))
    match kind:
        case "torus":
            return base
        case "cylinder":
            row = {2: 1, 0: 3}.get(s % 4)
            s_star = _cells(s, t, lambda i, j: i == s and j % 4 == row) if row is not None else 0
            return base | s_star
        case "grid":
            sides = _cells(s, t, lambda i, j: (i == s and j % 4 == 1) or (j == t and i % 4 == 3))
            row = {0: 1, 2: 3}.get(s % 4)
            col = {0: 1, 2: 3}.get(t % 4)
            s_star = _cells(s, t, lambda i, j: i == s and j % 4 == row) if row is not None else 0
            t_star = _cells(s, t, lambda i, j: j == t and i % 4 == col) if col is not None else 0
            return base | sides | s_star | t_star
    raise PreconditionError(f"unknown grid kind {kind!r}")


def shifted_patterns(s: int, t: int) -> list[Bits]:
    """i = a, j = b mod 2 and (i-a) - (j-b) = c mod 4 for a, b in {0, 1}, c in {0, 2}."""
    return [
        _cells(s, t, lambda i, j, a=a, b=b, c=c: i % 2 == a and j % 2 == b and ((i - a) - (j - b)) % 4 == c)
        for a in (1, 0)
        for b in (1, 0)
        for c in (0, 2)
    ]


def _live_edges(g: Graph, free: Bits) -> int:
    return sum((g.adj[v] & free).bit_count() for v in iter_bits(free)) // 2


def repair(g: Graph, s: Bits) -> Bits:
    """Add vertices, most remaining edges killed first (smallest index on ties), until s isolates."""
    full = full_mask(g.n)
    while True:
        free = full & ~closed_neighborhood_bits(g, s)
        live = _live_edges(g, free)
        if not live:
            return s
        best, best_kill = -1, -1
        for v in range(g.n):
            if s >> v & 1:
                continue
            left = free & ~(g.adj[v] | (1 << v))
            kill = live - _live_edges(g, left)
            if kill > best_kill:
                best, best_kill = v, kill
        s |= 1 << best


def prune(g: Graph, s: Bits) -> Bits:
    """Drop vertices, highest index first, whose removal keeps s isolating."""
    for v in sorted(iter_bits(s), reverse=True):
        if is_isolating(g, s & ~(1 << v)):
            s &= ~(1 << v)
    return s


def _origin(g: Graph, printed: Bits, best: Bits) -> str:
    if best == printed:
        return "printed"
    return "printed-improved" if is_isolating(g, printed) else "printed-invalid"


def grid_isolating(kind: GridKind, s: int, t: int) -> Certificate:
    """Smallest isolating set among the repaired patterns, checked against the printed upper bound.

    The note starts with the printed set's fate: "printed" when it is returned
    unchanged, "printed-improved" when it isolates but a smaller candidate won,
    "printed-invalid" when it leaves an edge. ",exact-search" follows when the
    bounded search on a board of at most EXACT_SEARCH_MAX_N vertices supplied the
    set, and ",exceeds-bound" when the returned set is larger than the bound.
    """
    if s < 3 or t < 3:
        raise PreconditionError(f"grid theorem needs s, t >= 3, got {s}, {t}")
    g = grid(kind, s, t)
    _, upper = grid_bounds(kind, s, t)
    budget = math.floor(upper)
    printed = printed_set(kind, s, t)
    candidates = [printed, *shifted_patterns(s, t)]
    best = min((prune(g, repair(g, c)) for c in candidates), key=lambda c: c.bit_count())
    parts = [_origin(g, printed, best)]
    if best.bit_count() > budget and g.n <= EXACT_SEARCH_MAX_N:
        logger.info("%s %dx%d: best pattern has %d vertices, searching for %d", kind, s, t, best.bit_count(), budget)
        found = isolating_set_of_size(g, ISOLATION, budget)
        if found is not None:
            best = found.bits
            parts = [_origin(g, printed, best), "exact-search"]
    if best.bit_count() > budget:
        parts.append("exceeds-bound")
    if best != printed:
        logger.info(
            "%s %dx%d: printed set of %d vertices replaced by %d",
            kind, s, t, printed.bit_count(), best.bit_count(),
        )
    return certify(g, best, f"grid-{kind}", Fraction(upper), note=",".join(parts), enforce_bound=False)
