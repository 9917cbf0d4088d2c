"""Largest iota/n among graphs of a given minimum degree; data for the open
question of the best constant at minimum degree 3 and 4."""

import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from ..errors import GraphSizeError, ParameterError
from ..families import complete, complete_bipartite, hypercube, kr_minus_hamiltonian, petersen
from ..graph_core import Graph, graph_id
from ..patterns import ISOLATION
from ..solvers import exact_isolation
from .enumeration import MAX_ORDER, enumerate_graphs

logger = logging.getLogger(__name__)

PROBE_DEGREES = (3, 4)


class ProbeRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str = Field(..., description="n=<order> for exhaustive rows, the graph name for named ones")
    n: int = Field(..., ge=0)
    graphs: int = Field(..., ge=0, description="Graphs of this minimum degree examined")
    max_ratio: Fraction | None = Field(None, description="Largest iota/n seen; None when no graph qualified")
    example_g6: str | None = Field(None, description="First graph attaining max_ratio")

    @field_serializer("max_ratio")
    def _ratio_as_text(self, ratio: Fraction | None) -> str | None:
        return None if ratio is None else str(ratio)


class ProbeTable(BaseModel):
    delta: int
    rows: list[ProbeRow] = Field(default_factory=list)

    def to_tsv(self) -> str:
        lines = ["label\tn\tgraphs\tmax_ratio\texample_g6"]
        for r in self.rows:
            ratio = "-" if r.max_ratio is None else str(r.max_ratio)
            lines.append(f"{r.label}\t{r.n}\t{r.graphs}\t{ratio}\t{r.example_g6 or '-'}")
        return "\n".join(lines) + "\n"


def _named(delta: int) -> list[tuple[str, Graph]]:
    if delta == 3:
        return [("K_4", complete(4)), ("K_3,3", complete_bipartite(3, 3)), ("Q_3", hypercube(3)), ("petersen", petersen())]
    return [("K_5", complete(5)), ("K_4,4", complete_bipartite(4, 4)), ("K_7-C_7", kr_minus_hamiltonian(7))]


def _ratio_row(label: str, n: int, graphs: list[Graph]) -> ProbeRow:
    best: Fraction | None = None
    example = None
    for g in graphs:
        ratio = Fraction(exact_isolation(g, ISOLATION)[0], g.n)
        if best is None or ratio > best:
            best, example = ratio, graph_id(g)
    return ProbeRow(label=label, n=n, graphs=len(graphs), max_ratio=best, example_g6=example)


def open_problem_probe(delta: int, n_max: int) -> ProbeTable:
    """Per order n <= n_max (isomorphism classes), then a few named graphs of minimum degree delta.

    Reports observations only.
    """
    if delta not in PROBE_DEGREES:
        raise ParameterError(f"probe covers minimum degree {PROBE_DEGREES}, got {delta}")
    if n_max > MAX_ORDER:
        raise GraphSizeError(f"exhaustive probe stops at n = {MAX_ORDER}, got {n_max}")
    table = ProbeTable(delta=delta)
    for n in range(delta + 1, n_max + 1):
        graphs = [g for g in enumerate_graphs(n, dedup=True) if g.min_degree() == delta]
        table.rows.append(_ratio_row(f"n={n}", n, graphs))
        logger.info("probe delta=%d n=%d: %d graphs", delta, n, len(graphs))
    for label, g in _named(delta):
        table.rows.append(_ratio_row(label, g.n, [g]))
    return table
