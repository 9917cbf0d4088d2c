from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from ..errors import ParameterError
from ..graph_core import Graph, VertexSet, emit_graph6, full_mask
from .matching import contains_subgraph


class StarFamily(BaseModel):
    """F = {K_{1,k+1}}; k = 0 is the plain isolation number."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["star"] = "star"
    k: int = Field(0, ge=0, description="Largest allowed remainder degree")

    @property
    def label(self) -> str:
        return f"star:{self.k}"


class CliqueFamily(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["clique"] = "clique"
    k: int = Field(..., ge=1, description="Forbidden clique order")

    @property
    def label(self) -> str:
        return f"clique:{self.k}"


class CyclesFamily(BaseModel):
    """Every cycle is forbidden: the remainder must induce a forest."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["cycles"] = "cycles"

    @property
    def label(self) -> str:
        return "cycles"


class TreesFamily(BaseModel):
    """Every tree of order k is forbidden: remainder components have fewer than k vertices."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["trees"] = "trees"
    k: int = Field(..., ge=2, description="Forbidden tree order")

    @property
    def label(self) -> str:
        return f"trees:{self.k}"


def _normalize(patterns: tuple[Graph, ...]) -> tuple[Graph, ...]:
    kept: list[Graph] = []
    for p in sorted(patterns, key=lambda h: (h.n, h.edge_count())):
        if not any(contains_subgraph(p, full_mask(p.n), q) for q in kept):
            kept.append(p)
    return tuple(kept)


class ExplicitFamily(BaseModel):
    """A finite list of patterns, normalized so no member contains another."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["explicit"] = "explicit"
    patterns: tuple[Graph, ...] = Field(..., min_length=1, description="Forbidden patterns")

    @field_validator("patterns")
    @classmethod
    def _drop_redundant(cls, patterns: tuple[Graph, ...]) -> tuple[Graph, ...]:
        if any(p.n == 0 for p in patterns):
            raise ParameterError("patterns need at least one vertex")
        return _normalize(patterns)

    @property
    def degenerate(self) -> bool:
        """An edgeless member forbids every remainder of its order, e.g. {K_1} forces domination."""
        return any(p.edge_count() == 0 for p in self.patterns)

    @property
    def label(self) -> str:
        return "explicit:" + ",".join(emit_graph6(p) for p in self.patterns)


PatternFamily = Annotated[
    Union[StarFamily, CliqueFamily, CyclesFamily, TreesFamily, ExplicitFamily],
    Field(discriminator="kind"),
]

ISOLATION = StarFamily(k=0)


class Certificate(BaseModel):
    """An isolating (or dominating) set with the algorithm that built it and the bound it promises."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    vertices: VertexSet = Field(..., description="The certified vertex set")
    family: PatternFamily = Field(default=ISOLATION, description="Family the remainder must avoid")
    producer: str = Field(..., description="Algorithm label")
    promised_bound: Fraction | None = Field(None, description="Upper bound the producer guarantees on the size")
    note: str = Field("", description="Free-form remark, e.g. that a printed construction was repaired")

    @field_serializer("promised_bound")
    def _bound_as_text(self, bound: Fraction | None) -> str | None:
        return None if bound is None else str(bound)

    @property
    def size(self) -> int:
        return len(self.vertices)
