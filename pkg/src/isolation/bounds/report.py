"""Every closed-form bound on the (k-)isolation number, evaluated on one graph.

Entries U* are upper bounds and L* lower bounds. Rational formulas are kept as
Fractions; the logarithmic ones are floats compared with REAL_SLACK. An entry
whose hypotheses fail is still reported, with applicable=False and the reason.
"""

import logging
import math
from fractions import Fraction

from ..errors import PreconditionError
from ..graph_core import (
    Graph,
    VertexSet,
    closed_neighborhood_bits,
    component_bits,
    full_mask,
    graph_id,
    is_bipartite,
    is_connected,
    is_cycle_bits,
    is_maximal_outerplanar,
    is_tree,
    square,
)
from ..patterns import PatternFamily, StarFamily, family_quotient, is_claw_free
from ..solvers import exact_domination, exact_independence_family, exact_isolation, exact_k_independence
from .models import BoundEntry, BoundReport, format_value

logger = logging.getLogger(__name__)


def _upper(name: str, value: Fraction | float, reason: str, target: str = "iota_k") -> BoundEntry:
    return BoundEntry(name=name, side="upper", target=target, value=value, applicable=True, reason=reason)


def _lower(name: str, value: Fraction | float, reason: str, target: str = "iota_k") -> BoundEntry:
    return BoundEntry(name=name, side="lower", target=target, value=value, applicable=True, reason=reason)


def _skip(name: str, side: str, reason: str, target: str = "iota_k") -> BoundEntry:
    return BoundEntry(name=name, side=side, target=target, value=None, applicable=False, reason=reason)


def _is_c5(g: Graph, comp: int) -> bool:
    return comp.bit_count() == 5 and is_cycle_bits(g, comp)


def _rest_ok_for_third(g: Graph, v: int) -> bool:
    rest = full_mask(g.n) & ~closed_neighborhood_bits(g, 1 << v)
    return all(c.bit_count() >= 3 and not _is_c5(g, c) for c in component_bits(g, rest))


def _order_bounds(g: Graph, k: int) -> list[BoundEntry]:
    n, delta_max = g.n, g.max_degree()
    out = [_upper("U1", Fraction(n, k + 2), "n/(k+2)")]
    if k != 0:
        out += [_skip(name, "upper", "bound is for k=0") for name in ("U2", "U3", "U4", "U5")]
    else:
        if n >= 3 and is_connected(g) and not _is_c5(g, full_mask(n)):
            out.append(_upper("U2", Fraction(n // 3), "connected, n >= 3, not C_5"))
        else:
            out.append(_skip("U2", "upper", "needs a connected graph on at least 3 vertices other than C_5"))
        comps = component_bits(g)
        if n and all(c.bit_count() >= 3 for c in comps):
            if any(_is_c5(g, c) for c in comps):
                out.append(_upper("U3", Fraction(2 * n, 5), "2n/5 with a C_5 component"))
            else:
                out.append(_upper("U3", Fraction(sum(c.bit_count() // 3 for c in comps)), "sum of floor(n_i/3)"))
        else:
            out.append(_skip("U3", "upper", "a component has fewer than 3 vertices"))
        if n:
            out.append(_upper("U4", Fraction(n - delta_max + 1, 2), "(n-Delta+1)/2"))
        else:
            out.append(_skip("U4", "upper", "empty graph"))
        if n and any(_rest_ok_for_third(g, v) for v in range(n) if g.degree(v) == delta_max):
            out.append(_upper("U5", Fraction(n - delta_max + 2, 3), "(n-Delta+2)/3"))
        else:
            out.append(_skip("U5", "upper", "no maximum-degree v leaves only components of order >= 3 without C_5"))
    if k == 1 and n:
        out.append(_upper("U6", Fraction(n - delta_max + 2, 3), "(n-Delta+2)/3 for k=1"))
    else:
        out.append(_skip("U6", "upper", "bound is for k=1"))
    return out


def _min_degree_bounds(g: Graph, k: int) -> list[BoundEntry]:
    n, delta = g.n, g.min_degree()
    out = []
    if k == 0 and n and delta >= 1:
        out.append(_upper("U7", (math.log(delta + 1) + 0.5) / (delta + 1) * n, "(ln(delta+1)+1/2)/(delta+1) n"))
        f_delta = {1: Fraction(1, 2), 2: Fraction(2, 5)}.get(delta, Fraction(1, 3))
        out.append(_upper("U8", f_delta * n, "f(min(delta,3)) n"))
    else:
        out.append(_skip("U7", "upper", "needs k=0 and delta >= 1"))
        out.append(_skip("U8", "upper", "needs k=0 and delta >= 1"))
    if n and delta >= k + 1:
        out.append(_upper("U9", (math.log(delta + 0.5) + 1) / (delta + 1) * n, "(ln(delta+1/2)+1)/(delta+1) n"))
        out.append(_upper("U9'", (math.log(delta + 1) + 1) / (delta + 1) * n, "(ln(delta+1)+1)/(delta+1) n"))
    else:
        out.append(_skip("U9", "upper", "needs delta >= k+1"))
        out.append(_skip("U9'", "upper", "needs delta >= k+1"))
    if k == 0 and n and delta >= 2 and is_bipartite(g):
        out.append(_upper("U10", (math.log(delta) + 1) / (2 * delta) * n, "(ln delta+1)/(2 delta) n, bipartite"))
    else:
        out.append(_skip("U10", "upper", "needs k=0, a bipartite graph and delta >= 2"))
    return out


def _seed_bounds(g: Graph, k: int, seed_set: VertexSet | None) -> list[BoundEntry]:
    names = ("U11a", "U11b", "U11c")
    if seed_set is None or k != 0:
        return [_skip(name, "upper", "needs k=0 and a seed set") for name in names]
    closed = closed_neighborhood_bits(g, seed_set.bits)
    rest = full_mask(g.n) & ~closed
    n, s, o = g.n, len(seed_set), (closed & ~seed_set.bits).bit_count()
    out = [_upper("U11a", Fraction(n - o + s, 2), "(n-|N(S)|+|S|)/2")]
    if all((g.adj[v] & rest).bit_count() >= 2 for v in range(g.n) if rest >> v & 1):
        out.append(_upper("U11b", Fraction(2 * n - 2 * o + 3 * s, 5), "(2n-2|N(S)|+3|S|)/5"))
    else:
        out.append(_skip("U11b", "upper", "G - N[S] has a vertex of degree below 2"))
    if all(c.bit_count() >= 3 and not _is_c5(g, c) for c in component_bits(g, rest)):
        out.append(_upper("U11c", Fraction(n - o + 2 * s, 3), "(n-|N(S)|+2|S|)/3"))
    else:
        out.append(_skip("U11c", "upper", "G - N[S] has a small or C_5 component"))
    return out


def _class_bounds(g: Graph, k: int) -> list[BoundEntry]:
    n = g.n
    out = []
    if k == 0 and n >= 4 and is_maximal_outerplanar(g):
        out.append(_upper("U13", Fraction(n, 4), "maximal outerplanar"))
    else:
        out.append(_skip("U13", "upper", "needs k=0 and a maximal outerplanar graph on at least 4 vertices"))
    tree = n >= 1 and is_tree(g)
    star = tree and n == k + 2 and g.max_degree() == k + 1
    if tree and not star:
        out.append(_upper("U14", Fraction(n, k + 3), "tree other than K_1,k+1"))
    else:
        out.append(_skip("U14", "upper", "needs a tree other than K_1,k+1"))
    inner = [v for v in range(n) if g.degree(v) > 1]
    degrees = {g.degree(v) for v in inner}
    if tree and len(inner) >= 2 and len(degrees) == 1 and (r := degrees.pop()) >= k + 3:
        out.append(_upper("U15", Fraction(n - 2, 2 * (r - 1)), f"tree with inner degree {r}"))
    else:
        out.append(_skip("U15", "upper", "needs a tree whose inner vertices, at least two, share a degree r >= k+3"))
    return out


def _degree_lower_bounds(g: Graph, k: int) -> list[BoundEntry]:
    n, delta, big = g.n, g.min_degree(), g.max_degree()
    m = g.edge_count()
    out = []
    if k == 0 and big >= 1:
        out.append(_lower("L3", Fraction(m, big * big), "d n/(2 Delta^2)"))
    else:
        out.append(_skip("L3", "lower", "needs k=0 and an edge"))
    if k == 0 and big >= 1 and is_claw_free(g):
        out.append(_lower("L4", Fraction(delta * (n + 1) + 2, (delta + 2) * (big + 1)), "claw-free, degrees"))
        out.append(_lower("L5", Fraction(4 * m, 3 * big * big + 2 * big), "claw-free, 2dn/(3Delta^2+2Delta)"))
    else:
        out.append(_skip("L4", "lower", "needs k=0, an edge and a claw-free graph"))
        out.append(_skip("L5", "lower", "needs k=0, an edge and a claw-free graph"))
    return out


def _aux_bounds(g: Graph, k: int, with_exact_aux: bool) -> list[BoundEntry]:
    n, delta, big = g.n, g.min_degree(), g.max_degree()
    r = k + 2
    product = f"iota_k(G x K_{r})"
    names = (
        ("L1", "lower", "iota_k"),
        ("L2", "lower", "iota_k"),
        ("L6", "lower", product),
        ("U12", "upper", product),
        ("L7", "lower", "iota(B(G))"),
        ("U17", "upper", "iota(B(G))"),
    )
    if not with_exact_aux or n == 0:
        return [_skip(name, side, "needs exact auxiliary solvers", target) for name, side, target in names]
    out = []
    if delta >= k + 1:
        gamma_sq, _ = exact_domination(square(g))
        out.append(_lower("L1", Fraction(gamma_sq), "gamma(G^2)"))
    else:
        out.append(_skip("L1", "lower", "needs delta >= k+1"))
    if big >= k + 1:
        alpha_k, _ = exact_k_independence(g, k)
        out.append(_lower("L2", Fraction(n + 1 - alpha_k, big + 1), "(n+1-alpha_k)/(Delta+1)"))
    else:
        out.append(_skip("L2", "lower", "needs Delta >= k+1"))
    family = StarFamily(k=k)
    gamma, _ = exact_domination(g)
    iota, _ = exact_isolation(g, family)
    alpha, _ = exact_independence_family(g, family)
    out.append(_lower("L6", Fraction(gamma), "gamma(G)", product))
    best = min(n, (r - 1) * gamma + iota, r * iota + alpha)
    out.append(_upper("U12", Fraction(best), "min{n, (r-1)gamma+iota, r iota+alpha}", product))
    out.append(_lower("L7", Fraction(gamma), "gamma(G)", "iota(B(G))"))
    out.append(_upper("U17", Fraction(2 * gamma), "2 gamma(G)", "iota(B(G))"))
    return out


def bound_report(g: Graph, k: int = 0, with_exact_aux: bool = False, seed_set: VertexSet | None = None) -> BoundReport:
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    entries = [
        *_order_bounds(g, k),
        *_min_degree_bounds(g, k),
        *_seed_bounds(g, k, seed_set),
        *_class_bounds(g, k),
        *_degree_lower_bounds(g, k),
        *_aux_bounds(g, k, with_exact_aux),
    ]
    report = BoundReport(graph_id=graph_id(g), k=k, entries=tuple(entries))
    logger.debug("bound report %s k=%d: %d applicable", report.graph_id, k, sum(e.applicable for e in entries))
    return report


def family_bound(g: Graph, family: PatternFamily) -> BoundEntry:
    """iota(G, F) <= q(F) n with q(F) the largest gamma(F)/n(F) over the family."""
    q = family_quotient(family)
    return BoundEntry(
        name="U16",
        side="upper",
        target=f"iota({family.label})",
        value=q * g.n,
        applicable=True,
        reason=f"q(F) = {q}",
    )


def regular_gap_note(g: Graph) -> tuple[Fraction, Fraction]:
    """(gamma/n, iota/n) of a regular graph.

    On the equality graphs of the degree lower bound these are 1/(r+1) and 1/(2r).
    """
    if g.n == 0 or not g.is_regular():
        raise PreconditionError("regular_gap_note needs a non-empty regular graph")
    gamma, _ = exact_domination(g)
    iota, _ = exact_isolation(g, StarFamily(k=0))
    return Fraction(gamma, g.n), Fraction(iota, g.n)


def render_rows(report: BoundReport) -> list[str]:
    """TSV rows name, side, value, applicable, reason (header first)."""
    rows = ["name\tside\tvalue\tapplicable\treason"]
    for e in report.entries:
        rows.append(f"{e.name}\t{e.side}\t{format_value(e.value)}\t{str(e.applicable).lower()}\t{e.reason}")
    return rows
