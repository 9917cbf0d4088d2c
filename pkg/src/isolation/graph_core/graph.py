from __future__ import annotations

from collections.abc import Iterable, Iterator
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import IsolationError
from .bits import Bits, full_mask, iter_bits, to_bits


class VertexSet(BaseModel):
    """A set of vertices of a host graph with n vertices, stored as an integer bitset."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count of the host graph")
    bits: int = Field(0, ge=0, description="Bit v set iff vertex v is a member")

    @model_validator(mode="after")
    def _within_width(self) -> VertexSet:
        if self.bits >> self.n:
            raise IsolationError(f"vertex set {self.bits:#x} exceeds width {self.n}")
        return self

    @classmethod
    def of(cls, n: int, vertices: Iterable[int] = ()) -> VertexSet:
        return cls(n=n, bits=to_bits(vertices))

    @classmethod
    def from_bits(cls, n: int, bits: Bits) -> VertexSet:
        return cls.model_construct(n=n, bits=bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls.model_construct(n=n, bits=full_mask(n))

    def __iter__(self) -> Iterator[int]:  # type: ignore[override]
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def _same_width(self, other: VertexSet) -> None:
        if other.n != self.n:
            raise IsolationError(f"width mismatch: {self.n} vs {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same_width(other)
        return VertexSet.from_bits(self.n, self.bits | other.bits)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same_width(other)
        return VertexSet.from_bits(self.n, self.bits & other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same_width(other)
        return VertexSet.from_bits(self.n, self.bits & ~other.bits)

    def complement(self) -> VertexSet:
        return VertexSet.from_bits(self.n, full_mask(self.n) & ~self.bits)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in iter_bits(self.bits)) + "}"


class Graph(BaseModel):
    """Immutable simple undirected graph on vertices 0..n-1.

    adj[v] is the open neighbourhood N(v) as an integer bitset.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Number of vertices")
    adj: tuple[int, ...] = Field(default=(), description="Open neighbourhood bitset per vertex")

    @model_validator(mode="after")
    def _simple_and_symmetric(self) -> Graph:
        if len(self.adj) != self.n:
            raise IsolationError(f"expected {self.n} neighbourhoods, got {len(self.adj)}")
        for v, nv in enumerate(self.adj):
            if nv < 0 or nv >> self.n:
                raise IsolationError(f"neighbourhood of {v} exceeds width {self.n}")
            if nv >> v & 1:
                raise IsolationError(f"loop at vertex {v}")
            for u in iter_bits(nv):
                if not self.adj[u] >> v & 1:
                    raise IsolationError(f"edge {v}-{u} is not symmetric")
        return self

    @classmethod
    def from_adjacency(cls, adj: Iterable[int], validate: bool = True) -> Graph:
        adj = tuple(adj)
        if validate:
            return cls(n=len(adj), adj=adj)
        return cls.model_construct(n=len(adj), adj=adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IsolationError(f"edge {u}-{v} outside 0..{n - 1}")
            if u == v:
                raise IsolationError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls.model_construct(n=n, adj=tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.model_construct(n=n, adj=(0,) * n)

    @property
    def vertices(self) -> Bits:
        return full_mask(self.n)

    def vertex_set(self, vertices: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, vertices)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nv.bit_count() for nv in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def average_degree(self) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.edge_count(), self.n)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in lexicographic order."""
        for u, nu in enumerate(self.adj):
            for v in iter_bits(nu >> (u + 1)):
                yield u, u + 1 + v

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def closed_neighborhood_bits(g: Graph, s: Bits) -> Bits:
    out = s
    adj = g.adj
    while s:
        low = s & -s
        out |= adj[low.bit_length() - 1]
        s ^= low
    return out


def open_neighborhood_bits(g: Graph, s: Bits) -> Bits:
    return closed_neighborhood_bits(g, s) & ~s


def remainder_bits(g: Graph, s: Bits) -> Bits:
    return full_mask(g.n) & ~closed_neighborhood_bits(g, s)


def _check_width(g: Graph, s: VertexSet) -> None:
    if s.n != g.n:
        raise IsolationError(f"vertex set of width {s.n} used with a graph on {g.n} vertices")


def closed_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """N[S] = S together with every neighbour of a vertex of S."""
    _check_width(g, s)
    return VertexSet.from_bits(g.n, closed_neighborhood_bits(g, s.bits))


def open_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    _check_width(g, s)
    return VertexSet.from_bits(g.n, open_neighborhood_bits(g, s.bits))


def remainder(g: Graph, s: VertexSet) -> VertexSet:
    """R(S) = V minus N[S]: the vertices S leaves undominated."""
    _check_width(g, s)
    return VertexSet.from_bits(g.n, remainder_bits(g, s.bits))


def is_dominating_bits(g: Graph, s: Bits) -> bool:
    return closed_neighborhood_bits(g, s) == full_mask(g.n)
