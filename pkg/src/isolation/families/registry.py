"""Name -> generator table used by `isolate generate` and by the sweeps."""

import logging
from collections.abc import Callable, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field

from ..errors import ParameterError
from ..graph_core import Graph, line_graph
from . import extremal, standard as std

logger = logging.getLogger(__name__)

Param = int | str


class FamilyEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = Field(..., description="Name used on the command line")
    params: tuple[str, ...] = Field(default=(), description="Keyword parameters, in order")
    graphs: int = Field(default=0, description="Number of input graphs the generator takes first")
    optional_graph: bool = Field(default=False, description="The single input graph may be omitted")
    build: Callable[..., Graph] = Field(..., description="Generator")
    summary: str = Field(default="", description="One-line description for --help")


STANDARD_KINDS = (
    "path",
    "cycle",
    "complete",
    "empty",
    "complete_bipartite",
    "star",
    "petersen",
    "hypercube",
    "random_tree",
    "random_regular",
)

_ENTRIES = [
    FamilyEntry(name="path", params=("n",), build=std.path, summary="P_n"),
    FamilyEntry(name="cycle", params=("n",), build=std.cycle, summary="C_n"),
    FamilyEntry(name="complete", params=("n",), build=std.complete, summary="K_n"),
    FamilyEntry(name="empty", params=("n",), build=std.empty, summary="n isolated vertices"),
    FamilyEntry(name="complete_bipartite", params=("p", "q"), build=std.complete_bipartite, summary="K_p,q"),
    FamilyEntry(name="star", params=("r",), build=std.star, summary="K_1,r"),
    FamilyEntry(name="petersen", build=std.petersen, summary="Petersen graph"),
    FamilyEntry(name="hypercube", params=("d",), build=std.hypercube, summary="Q_d"),
    FamilyEntry(name="random_tree", params=("n", "seed"), build=std.random_tree, summary="Pruefer tree"),
    FamilyEntry(name="random_regular", params=("n", "d", "seed"), build=std.random_regular, summary="pairing model"),
    FamilyEntry(name="fan", params=("n",), build=std.fan_triangulation, summary="fan triangulation"),
    FamilyEntry(
        name="polygon",
        params=("n", "seed"),
        build=std.random_polygon_triangulation,
        summary="random polygon triangulation",
    ),
    FamilyEntry(name="grid", params=("kind", "s", "t"), build=std.grid, summary="torus, cylinder or grid"),
    FamilyEntry(name="corona", params=("mode",), graphs=1, build=extremal.corona_k2, summary="K_2 on every vertex"),
    FamilyEntry(name="f_rst", params=("r", "s", "t"), build=extremal.f_rst, summary="r K_3 + s P_3 + t C_6"),
    FamilyEntry(name="kr_minus_cr", params=("r",), build=extremal.kr_minus_hamiltonian, summary="K_r - C_r"),
    FamilyEntry(
        name="compose",
        params=("hook", "mode"),
        graphs=2,
        build=lambda h, gstar, hook, mode: extremal.compose_general(h, hook, gstar, mode),
        summary="pattern copies hung on a connecting graph",
    ),
    FamilyEntry(name="path_of_stars", params=("t", "k"), build=extremal.path_of_stars, summary="stars on a path"),
    FamilyEntry(
        name="caterpillar",
        params=("t", "r"),
        build=extremal.equal_degree_caterpillar,
        summary="equal inner degree caterpillar",
    ),
    FamilyEntry(
        name="outerplanar_sharp",
        params=("p",),
        graphs=1,
        optional_graph=True,
        build=lambda base, p: extremal.outerplanar_sharp(p, base),
        summary="maximal outerplanar with iota = n/4",
    ),
    FamilyEntry(
        name="lb_equality",
        params=("t", "delta"),
        build=lambda t, delta: extremal.lb_equality_bipartite(t, delta),
        summary="degree lower bound equality",
    ),
    FamilyEntry(
        name="star_lower",
        params=("delta", "k"),
        build=lambda delta, k: extremal.star_lower_sharp(delta, k),
        summary="hub and cliques",
    ),
    FamilyEntry(name="subdivided_star", params=("p", "q"), build=extremal.subdivided_star, summary="(n-D+1)/2 sharp"),
    FamilyEntry(name="copies", params=("c",), graphs=1, build=extremal.disjoint_copies, summary="c disjoint copies"),
    FamilyEntry(name="ng_delta0", params=("n",), build=extremal.ng_sharp_delta0, summary="matching plus isolates"),
    FamilyEntry(name="ng_delta1", params=("n",), build=extremal.ng_sharp_delta1, summary="matching plus P_3"),
    FamilyEntry(name="line", graphs=1, build=line_graph, summary="line graph"),
]

FAMILIES: dict[str, FamilyEntry] = {e.name: e for e in _ENTRIES}


def parse_params(items: Sequence[str]) -> dict[str, Param]:
    """key=value pairs; values made of digits (optionally signed) become ints."""
    out: dict[str, Param] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ParameterError(f"expected key=value, got {item!r}")
        out[key] = int(value) if value.lstrip("-").isdigit() else value
    return out


def generate(name: str, params: Mapping[str, Param], graphs: Sequence[Graph] = ()) -> Graph:
    entry = FAMILIES.get(name)
    if entry is None:
        raise ParameterError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    missing = [p for p in entry.params if p not in params]
    unknown = sorted(set(params) - set(entry.params))
    if missing or unknown:
        takes = ", ".join(entry.params) or "no parameters"
        raise ParameterError(f"{name} takes {takes}; missing {missing}, unknown {unknown}")
    inputs: list[Graph | None] = list(graphs)
    if entry.optional_graph and not inputs:
        inputs = [None]
    if len(inputs) != entry.graphs:
        raise ParameterError(f"{name} takes {entry.graphs} input graph(s), got {len(inputs)}")
    logger.debug("generating %s with %s", name, dict(params))
    try:
        return entry.build(*inputs, **{p: params[p] for p in entry.params})
    except TypeError as e:
        raise ParameterError(f"bad parameters for {name}: {e}") from e


def standard(kind: str, params: Mapping[str, Param]) -> Graph:
    """One of the standard graphs of STANDARD_KINDS."""
    if kind not in STANDARD_KINDS:
        raise ParameterError(f"{kind!r} is not a standard graph; known: {', '.join(STANDARD_KINDS)}")
    return generate(kind, params)
