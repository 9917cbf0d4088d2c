"""Theorem checks evaluated graph by graph.

A check returns an Outcome, or None when its hypotheses do not hold for the graph
(the graph is then not counted as tested). GraphFacts caches the exact values
several checks share, so each graph pays for every solver at most once.
"""

import logging
import math
from collections.abc import Callable
from fractions import Fraction
from functools import cached_property

from pydantic import BaseModel, ConfigDict, Field

from ..bounds import REAL_SLACK, bound_report, family_bound, grid_bounds
from ..constructive import grid_isolating, isolating_third, product_isolating, tree_k_isolating
from ..errors import IsolationError
from ..families import GridKind, complete, path, star
from ..graph_core import (
    Graph,
    bipartite_double,
    cartesian_product,
    complement,
    graph_id,
    is_connected,
    is_isomorphic_to_cycle,
    is_maximal_outerplanar,
    is_tree,
)
from ..patterns import (
    ISOLATION,
    CliqueFamily,
    CyclesFamily,
    ExplicitFamily,
    PatternFamily,
    StarFamily,
    TreesFamily,
    check_certificate,
    is_claw_free,
)
from ..solvers import (
    decomposition_oracle,
    exact_domination,
    exact_independence_family,
    exact_isolation,
    partition_isolation_oracle,
)
from .models import Outcome

logger = logging.getLogger(__name__)

# Trees above this order get the constructive check only.
TREE_EXACT_LIMIT = 16


class GraphFacts:
    """One graph plus lazily computed exact invariants."""

    def __init__(
        self,
        g: Graph,
        exact_aux: bool = False,
        grid: tuple[GridKind, int, int] | None = None,
    ):
        self.g = g
        self.exact_aux = exact_aux
        self.grid = grid
        self._iota: dict[PatternFamily, int] = {}

    @cached_property
    def g6(self) -> str:
        return graph_id(self.g)

    @cached_property
    def gamma(self) -> int:
        return exact_domination(self.g)[0]

    def iota(self, family: PatternFamily = ISOLATION) -> int:
        if family not in self._iota:
            self._iota[family] = exact_isolation(self.g, family)[0]
        return self._iota[family]

    def iota_k(self, k: int) -> int:
        return self.iota(StarFamily(k=k))

    @cached_property
    def co(self) -> "GraphFacts":
        return GraphFacts(complement(self.g))

    @cached_property
    def ng_sum(self) -> int:
        return self.iota() + self.co.iota()


Check = Callable[[GraphFacts], Outcome | None]


class CheckSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Stable id used in reports and on the command line")
    max_n: int | None = Field(None, description="Graphs above this order are skipped")
    run: Check = Field(..., description="The check itself")
    summary: str = Field("", description="Statement being checked")


def _at_most(value: int, bound: Fraction | int, what: str) -> Outcome:
    return Outcome(holds=value <= bound, tight=value == bound, detail=f"{what}: {value} vs bound {bound}")


def _at_least(value: int, bound: Fraction | int, what: str) -> Outcome:
    return Outcome(holds=value >= bound, tight=value == bound, detail=f"{what}: {value} vs bound {bound}")


def _equal(value: int, expected: int, what: str) -> Outcome:
    return Outcome(holds=value == expected, tight=value == expected, detail=f"{what}: {value} vs {expected}")


def _all(*outcomes: Outcome) -> Outcome:
    """Holds when every part holds; tightness is the first part's."""
    failed = [o.detail for o in outcomes if not o.holds]
    return Outcome(
        holds=not failed,
        tight=outcomes[0].tight,
        detail="; ".join(failed) if failed else outcomes[0].detail,
    )


def _failure(exc: IsolationError) -> Outcome:
    return Outcome(holds=False, detail=f"{type(exc).__name__}: {exc}")


def dom_sum_upper(f: GraphFacts) -> Outcome:
    return _all(_at_most(f.iota_k(0), f.gamma, "iota <= gamma"), _at_most(f.iota_k(1), f.gamma, "iota_1 <= gamma"))


def dom_sum_partition(f: GraphFacts) -> Outcome:
    return _equal(partition_isolation_oracle(f.g, ISOLATION), f.iota(), "min over partitions")


def dom_sum_decomposition(f: GraphFacts) -> Outcome:
    return _equal(decomposition_oracle(f.g, ISOLATION), f.iota(), "min over F-free parts")


_K2, _P3, _K3 = complete(2), path(3), complete(3)


def family_monotone(f: GraphFacts) -> Outcome:
    k2 = f.iota(ExplicitFamily(patterns=(_K2,)))
    p3 = f.iota(ExplicitFamily(patterns=(_P3,)))
    k3 = f.iota(ExplicitFamily(patterns=(_K3,)))
    both = f.iota(ExplicitFamily(patterns=(_P3, _K3)))
    return _all(
        _at_most(p3, k2, "{P_3} under {K_2}"),
        _at_most(k3, k2, "{K_3} under {K_2}"),
        _at_most(p3, both, "{P_3} within {P_3, K_3}"),
        _equal(both, p3, "K_3 redundant next to P_3"),
        _equal(p3, f.iota_k(1), "{P_3} as K_1,2"),
        _equal(k2, f.iota_k(0), "{K_2} as K_1,1"),
    )


_QUOTIENT_PATTERNS = (_K2, _P3, _K3, star(3))
_QUOTIENT_FAMILIES: tuple[PatternFamily, ...] = (
    ISOLATION,
    StarFamily(k=1),
    CliqueFamily(k=3),
    CyclesFamily(),
    TreesFamily(k=3),
)


def dom_quotient(f: GraphFacts) -> Outcome:
    n = f.g.n
    parts = []
    for h in _QUOTIENT_PATTERNS:
        gamma_h = exact_domination(h)[0]
        value = f.iota(ExplicitFamily(patterns=(h,)))
        parts.append(_at_most(value, gamma_h * (n // h.n), f"iota_{graph_id(h)} <= gamma(H) floor(n/n(H))"))
    for family in _QUOTIENT_FAMILIES:
        entry = family_bound(f.g, family)
        value = f.iota(family)
        parts.append(Outcome(holds=entry.holds_for(value), detail=f"{entry.target}: {value} vs {entry.value}"))
    return _all(*parts)


def star_dominates(f: GraphFacts) -> Outcome:
    parts = [_at_most(f.iota(family), f.iota_k(1), f"{family.label} under iota_1") for family in _QUOTIENT_FAMILIES[2:]]
    parts += [_at_most(f.iota_k(k), Fraction(f.g.n, k + 2), f"iota_{k} <= n/{k + 2}") for k in (0, 1)]
    return _all(*parts)


def product_sandwich(f: GraphFacts) -> Outcome:
    g, n, gamma = f.g, f.g.n, f.gamma
    parts = []
    for r in (2, 3):
        family = StarFamily(k=r - 2)
        iota = f.iota(family)
        alpha = exact_independence_family(g, family)[0]
        value = exact_isolation(cartesian_product(g, complete(r)), family)[0]
        upper = min(n, (r - 1) * gamma + iota, r * iota + alpha)
        parts += [
            _at_least(value, gamma, f"r={r} gamma lower"),
            _at_most(value, upper, f"r={r} middle upper"),
            _at_most(upper, min(n, r * gamma), f"r={r} outer upper"),
        ]
        try:
            cert = product_isolating(g, r, family)
        except IsolationError as exc:
            return _failure(exc)
        parts.append(_equal(cert.size, (r - 1) * gamma + iota, f"r={r} explicit set"))
    return _all(*parts)


def double_sandwich(f: GraphFacts) -> Outcome:
    b = bipartite_double(f.g)
    iota_b = exact_isolation(b, ISOLATION)[0]
    gamma_b = exact_domination(b)[0]
    return _all(
        _at_least(iota_b, f.gamma, "iota(B) >= gamma"),
        _at_most(iota_b, gamma_b, "iota(B) <= gamma(B)"),
        _at_most(gamma_b, 2 * f.gamma, "gamma(B) <= 2 gamma"),
    )


def _third_applies(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not (g.n == 5 and is_isomorphic_to_cycle(g))


def third_exact(f: GraphFacts) -> Outcome | None:
    if not _third_applies(f.g):
        return None
    return _at_most(f.iota(), f.g.n // 3, "iota <= floor(n/3)")


def third_constructive(f: GraphFacts) -> Outcome | None:
    if not _third_applies(f.g):
        return None
    try:
        cert = isolating_third(f.g)
    except IsolationError as exc:
        return _failure(exc)
    return _at_most(cert.size, f.g.n // 3, "certificate size")


def _sandwich(k: int) -> Check:
    def run(f: GraphFacts) -> Outcome:
        report = bound_report(f.g, k, with_exact_aux=f.exact_aux)
        exact = f.iota_k(k)
        bad = report.violations(exact)
        tight = tuple(e.name for e in report.applicable() if e.is_tight(exact))
        detail = ", ".join(f"{e.name} {e.side} {e.value}" for e in bad)
        return Outcome(holds=not bad, tight=bool(tight), tight_entries=tight, detail=f"iota_{k} = {exact}: {detail}")

    return run


def ng_lower(f: GraphFacts) -> Outcome | None:
    if f.g.n < 2:
        return None
    return _at_least(f.ng_sum, 1, "iota + co-iota")


def ng_three(f: GraphFacts) -> Outcome | None:
    if f.co.iota() < 3:
        return None
    return _at_most(f.ng_sum, f.g.min_degree() + 1, "iota + co-iota <= delta + 1")


_NG_BOUNDS: dict[int, Callable[[int], Fraction]] = {
    0: lambda n: Fraction((n + 1) // 2),
    1: lambda n: Fraction(n // 2 + 1),
    2: lambda n: Fraction(2 * n, 5) + 2,
    3: lambda n: Fraction(n, 3) + 2,
}


def _ng_delta(delta: int) -> Check:
    def run(f: GraphFacts) -> Outcome | None:
        if f.g.min_degree() != delta:
            return None
        return _at_most(f.ng_sum, _NG_BOUNDS[delta](f.g.n), f"iota + co-iota at delta {delta}")

    return run


def min_degree_ratio(delta: int) -> Fraction | float:
    """Proven upper ratio iota/n over graphs of minimum degree delta >= 2."""
    if delta == 2:
        return Fraction(2, 5)
    if delta == 3:
        return Fraction(1, 3)
    return (math.log(delta + 1) + 0.5) / (delta + 1)


def _at_most_real(value: int, bound: Fraction | float, what: str) -> Outcome:
    return Outcome(
        holds=value <= bound + REAL_SLACK,
        tight=abs(value - bound) <= REAL_SLACK,
        detail=f"{what}: {value} vs bound {float(bound):.6f}",
    )


def ng_ratio(f: GraphFacts) -> Outcome | None:
    delta = f.g.min_degree()
    if delta < 2:
        return None
    ratio = min_degree_ratio(delta)
    if f.g.n < (delta - 1) / ratio:
        return None
    return _at_most_real(f.ng_sum, ratio * f.g.n + 2, f"iota + co-iota <= f({delta}) n + 2")


def ng_log(f: GraphFacts) -> Outcome | None:
    if f.g.n < 2:
        return None
    delta = f.g.min_degree()
    log_term = math.log(delta + 1) + 0.5
    if f.g.n < (delta - 1) * (delta + 1) / log_term:
        return None
    return _at_most_real(f.ng_sum, log_term / (delta + 1) * f.g.n + 2, f"iota + co-iota, logarithmic at delta {delta}")


def _tree_k(k: int) -> Check:
    def run(f: GraphFacts) -> Outcome | None:
        g = f.g
        if not is_tree(g) or (g.n == k + 2 and g.max_degree() == k + 1):
            return None
        bound = g.n // (k + 3)
        try:
            cert = tree_k_isolating(g, k)
        except IsolationError as exc:
            return _failure(exc)
        parts = [_at_most(cert.size, bound, f"tree certificate k={k}")]
        if g.n <= TREE_EXACT_LIMIT:
            parts.insert(0, _at_most(f.iota_k(k), bound, f"iota_{k} <= floor(n/(k+3))"))
        return _all(*parts)

    return run


def outerplanar_quarter(f: GraphFacts) -> Outcome | None:
    if f.g.n < 4 or not is_maximal_outerplanar(f.g):
        return None
    return _at_most(f.iota(), Fraction(f.g.n, 4), "iota <= n/4")


def grid_sandwich(f: GraphFacts) -> Outcome | None:
    if f.grid is None:
        return None
    kind, s, t = f.grid
    lower, upper = grid_bounds(kind, s, t)
    try:
        cert = grid_isolating(kind, s, t)
    except IsolationError as exc:
        return _failure(exc)
    exact = f.iota()
    return _all(
        _at_least(exact, lower, f"{kind} {s}x{t} lower"),
        _at_most(exact, upper, f"{kind} {s}x{t} upper"),
        Outcome(holds=check_certificate(f.g, cert), detail=f"grid certificate {cert.size} ({cert.note})"),
    )


def claw_free_lower(f: GraphFacts) -> Outcome | None:
    if f.g.max_degree() < 1 or not is_claw_free(f.g):
        return None
    report = bound_report(f.g, 0)
    exact = f.iota()
    entries = [report.entry("L4"), report.entry("L5")]
    bad = [e.name for e in entries if not e.holds_for(exact)]
    tight = tuple(e.name for e in entries if e.is_tight(exact))
    return Outcome(holds=not bad, tight=bool(tight), tight_entries=tight, detail=f"iota = {exact}, failed {bad}")


_SPECS = [
    CheckSpec(name="la-dom-sum-i", run=dom_sum_upper, summary="iota(G,F) <= gamma(G)"),
    CheckSpec(name="la-dom-sum-ii", max_n=5, run=dom_sum_partition, summary="min over A + B of iota(G[A]) + gamma(G[B])"),
    CheckSpec(name="la-dom-sum-iii", max_n=5, run=dom_sum_decomposition, summary="min over F-free H of gamma(G - H)"),
    CheckSpec(name="la-family", max_n=6, run=family_monotone, summary="monotonicity in the family"),
    CheckSpec(name="la-dom-quot", run=dom_quotient, summary="iota_H <= gamma(H) floor(n/n(H)), iota <= q(F) n"),
    CheckSpec(name="cor-bounds-i", run=star_dominates, summary="iota(G,F) <= iota_k when Delta(F) >= k+1"),
    CheckSpec(name="thm-dom-i", max_n=5, run=product_sandwich, summary="gamma <= iota(G x K_r) <= ..."),
    CheckSpec(name="thm-dom-ii", max_n=5, run=double_sandwich, summary="gamma <= iota(B) <= gamma(B) <= 2 gamma"),
    CheckSpec(name="thm-n3", run=third_exact, summary="connected, not C_5: iota <= floor(n/3)"),
    CheckSpec(name="thm-n3-constructive", run=third_constructive, summary="isolating_third within floor(n/3)"),
    CheckSpec(name="sandwich-k0", run=_sandwich(0), summary="every applicable bound on iota"),
    CheckSpec(name="sandwich-k1", run=_sandwich(1), summary="every applicable bound on iota_1"),
    CheckSpec(name="ng-lower", run=ng_lower, summary="iota + co-iota >= 1"),
    CheckSpec(name="ng-iota3", run=ng_three, summary="co-iota >= 3: sum <= delta + 1"),
    *(
        CheckSpec(name=f"ng-delta{d}", run=_ng_delta(d), summary=f"sum bound at minimum degree {d}")
        for d in range(4)
    ),
]

_SAMPLE_SPECS = [
    *(CheckSpec(name=f"tree-k{k}", run=_tree_k(k), summary=f"trees: iota_{k} <= floor(n/{k + 3})") for k in range(3)),
    CheckSpec(name="outerplanar-quarter", run=outerplanar_quarter, summary="maximal outerplanar: iota <= n/4"),
    CheckSpec(name="grid-sandwich", run=grid_sandwich, summary="grid lower <= iota <= upper, certificate valid"),
    CheckSpec(name="claw-free-lower", run=claw_free_lower, summary="claw-free degree lower bounds"),
    CheckSpec(name="ng-ratio", run=ng_ratio, summary="delta >= 2, n >= (delta-1)/f(delta): sum <= f(delta) n + 2"),
    CheckSpec(name="ng-log", run=ng_log, summary="n large for delta: sum <= (ln(delta+1)+1/2)/(delta+1) n + 2"),
]

SWEEP_CHECKS: tuple[str, ...] = tuple(s.name for s in _SPECS)
CHECKS: dict[str, CheckSpec] = {s.name: s for s in (*_SPECS, *_SAMPLE_SPECS)}


def run_check(spec: CheckSpec, facts: GraphFacts) -> Outcome | None:
    if spec.max_n is not None and facts.g.n > spec.max_n:
        return None
    return spec.run(facts)
