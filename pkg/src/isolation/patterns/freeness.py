"""F-free predicates over induced remainders, with dedicated checks for the built-in families."""

import logging
from fractions import Fraction
from pathlib import Path

from ..errors import IsolationError, ParameterError
from ..graph_core import (
    Bits,
    Graph,
    VertexSet,
    component_bits,
    edge_count_bits,
    iter_bits,
    read_graph,
    remainder_bits,
)
from .matching import connected_prefix, find_clique, find_subgraph
from .models import (
    Certificate,
    CliqueFamily,
    CyclesFamily,
    ExplicitFamily,
    PatternFamily,
    StarFamily,
    TreesFamily,
)

logger = logging.getLogger(__name__)


def is_f_free_bits(g: Graph, region: Bits, family: PatternFamily) -> bool:
    match family:
        case StarFamily(k=k):
            adj = g.adj
            for v in iter_bits(region):
                if (adj[v] & region).bit_count() > k:
                    return False
            return True
        case CliqueFamily(k=k):
            return find_clique(g, region, k) is None
        case CyclesFamily():
            return edge_count_bits(g, region) == region.bit_count() - len(component_bits(g, region))
        case TreesFamily(k=k):
            if region.bit_count() < k:
                return True
            return all(c.bit_count() < k for c in component_bits(g, region))
        case ExplicitFamily(patterns=patterns):
            return all(find_subgraph(g, region, p) is None for p in patterns)
    raise IsolationError(f"unknown family {family!r}")


def is_f_free(g: Graph, region: VertexSet, family: PatternFamily) -> bool:
    """True iff g[region] contains no member of family as a subgraph."""
    return is_f_free_bits(g, region.bits, family)


def _find_cycle(g: Graph, region: Bits) -> Bits | None:
    parent: dict[int, int] = {}
    for root in iter_bits(region):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v] & region):
                if u == parent[v]:
                    continue
                if u in parent:
                    # back edge v-u closes a cycle through their common ancestor
                    path_v = [v]
                    while path_v[-1] != -1:
                        path_v.append(parent[path_v[-1]])
                    path_u = [u]
                    while path_u[-1] != -1:
                        path_u.append(parent[path_u[-1]])
                    on_u = set(path_u)
                    cycle = 0
                    for x in path_v:
                        cycle |= 1 << x
                        if x in on_u:
                            for y in path_u:
                                cycle |= 1 << y
                                if y == x:
                                    break
                            return cycle
                    continue
                parent[u] = v
                stack.append(u)
    return None


def find_violation_bits(g: Graph, region: Bits, family: PatternFamily) -> Bits | None:
    """Vertex set of one forbidden occurrence inside g[region], or None when region is F-free."""
    match family:
        case StarFamily(k=k):
            for v in iter_bits(region):
                nv = g.adj[v] & region
                if nv.bit_count() > k:
                    leaves = 0
                    for u in iter_bits(nv):
                        if leaves.bit_count() == k + 1:
                            break
                        leaves |= 1 << u
                    return leaves | (1 << v)
            return None
        case CliqueFamily(k=k):
            return find_clique(g, region, k)
        case CyclesFamily():
            return _find_cycle(g, region)
        case TreesFamily(k=k):
            for comp in component_bits(g, region):
                if comp.bit_count() >= k:
                    return connected_prefix(g, comp, k)
            return None
        case ExplicitFamily(patterns=patterns):
            for p in patterns:
                image = find_subgraph(g, region, p)
                if image is not None:
                    out = 0
                    for v in image:
                        out |= 1 << v
                    return out
            return None
    raise IsolationError(f"unknown family {family!r}")


def find_violation(g: Graph, region: VertexSet, family: PatternFamily) -> VertexSet | None:
    found = find_violation_bits(g, region.bits, family)
    return None if found is None else VertexSet.from_bits(g.n, found)


def check_certificate(g: Graph, cert: Certificate) -> bool:
    """The remainder of cert.vertices is F-free and the size respects the promised bound."""
    if cert.vertices.n != g.n:
        return False
    if not is_f_free_bits(g, remainder_bits(g, cert.vertices.bits), cert.family):
        return False
    return cert.promised_bound is None or cert.size <= cert.promised_bound


def parse_family(text: str) -> PatternFamily:
    """Parse star:k, clique:k, cycles, trees:k or file:<path>[,<path>...]."""
    name, _, arg = text.strip().partition(":")
    try:
        match name:
            case "star":
                return StarFamily(k=int(arg))
            case "clique":
                return CliqueFamily(k=int(arg))
            case "cycles" if not arg:
                return CyclesFamily()
            case "trees":
                return TreesFamily(k=int(arg))
            case "file" if arg:
                family = ExplicitFamily(patterns=tuple(read_graph(Path(p)) for p in arg.split(",")))
                if family.degenerate:
                    logger.warning("family %s has an edgeless member; isolation degenerates to domination", family.label)
                return family
    except ValueError as exc:
        raise ParameterError(f"bad family {text!r}: {exc}") from exc
    raise ParameterError(f"unknown family {text!r}; expected star:k, clique:k, cycles, trees:k or file:<path>")


def family_min_order(family: PatternFamily) -> int:
    """Smallest order of a member of the family."""
    match family:
        case StarFamily(k=k):
            return k + 2
        case CliqueFamily(k=k):
            return k
        case CyclesFamily():
            return 3
        case TreesFamily(k=k):
            return k
        case ExplicitFamily(patterns=patterns):
            return min(p.n for p in patterns)
    raise IsolationError(f"unknown family {family!r}")


def family_quotient(family: PatternFamily) -> Fraction:
    """sup over members F of gamma(F) / n(F)."""
    match family:
        case StarFamily(k=k):
            return Fraction(1, k + 2)
        case CliqueFamily(k=k):
            return Fraction(1, k)
        case CyclesFamily():
            return Fraction(1, 2)
        case TreesFamily(k=k):
            return Fraction(k // 2, k)
        case ExplicitFamily(patterns=patterns):
            from ..solvers.exact import exact_domination

            return max(Fraction(exact_domination(p)[0], p.n) for p in patterns)
    raise IsolationError(f"unknown family {family!r}")
