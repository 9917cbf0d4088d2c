"""Exhaustive theorem sweeps over all small graphs.

Work is cut into chunks by the top bits of the adjacency mask (labelled sweeps) or
by stride over the isomorphism classes (dedup sweeps). Chunks are independent and
are merged in (n, chunk) order, so the result does not depend on the worker count.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence

from pydantic import BaseModel, Field
from tqdm import tqdm
from tqdm.contrib.concurrent import process_map

from ..errors import GraphSizeError, ParameterError
from ..graph_core import Graph, is_connected
from .checks import CHECKS, SWEEP_CHECKS, GraphFacts, run_check
from .enumeration import MAX_ORDER, canonical_masks, graph_from_mask, pair_count
from .models import CheckTally, SweepResult, Violation

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_BITS = 4


class Chunk(BaseModel):
    n: int = Field(..., ge=0, le=MAX_ORDER, description="Graph order")
    index: int = Field(..., ge=0, description="Chunk number within this order")
    count: int = Field(..., ge=1, description="Chunks for this order")
    dedup: bool = Field(False, description="Walk isomorphism classes instead of labelled graphs")
    connected_only: bool = Field(False, description="Skip disconnected graphs")
    checks: tuple[str, ...] = Field(..., description="Check ids to run")
    exact_aux: bool = Field(False, description="Pass exact auxiliary solvers to the bound report")


class ChunkResult(BaseModel):
    n: int
    index: int
    tallies: dict[str, CheckTally] = Field(default_factory=dict)
    violations: list[Violation] = Field(default_factory=list)
    tightness: dict[str, int] = Field(default_factory=dict)


def resolve_checks(names: Sequence[str] | None, default: Sequence[str] = SWEEP_CHECKS) -> tuple[str, ...]:
    """None or ["all"] means the default set; unknown ids are a ParameterError."""
    if not names or list(names) == ["all"]:
        return tuple(default)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ParameterError(f"unknown checks {unknown}; known: {', '.join(sorted(CHECKS))}")
    return tuple(names)


def make_chunks(
    n: int,
    checks: tuple[str, ...],
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    dedup: bool = False,
    connected_only: bool = False,
    exact_aux: bool = False,
) -> list[Chunk]:
    bits = min(chunk_bits, pair_count(n))
    count = 1 << bits
    return [
        Chunk(
            n=n,
            index=i,
            count=count,
            dedup=dedup,
            connected_only=connected_only,
            checks=checks,
            exact_aux=exact_aux,
        )
        for i in range(count)
    ]


def chunk_graphs(chunk: Chunk) -> Iterator[Graph]:
    if chunk.dedup:
        masks: Iterable[int] = canonical_masks(chunk.n)[chunk.index :: chunk.count]
    else:
        shift = pair_count(chunk.n) - (chunk.count.bit_length() - 1)
        masks = range(chunk.index << shift, (chunk.index + 1) << shift)
    for mask in masks:
        g = graph_from_mask(chunk.n, mask)
        if chunk.connected_only and not is_connected(g):
            continue
        yield g


def tally_graph(
    facts: GraphFacts,
    checks: Sequence[str],
    tallies: dict[str, CheckTally],
    violations: list[Violation],
    tightness: dict[str, int],
) -> None:
    """Run every check on one graph and fold the outcomes into the running totals."""
    for name in checks:
        outcome = run_check(CHECKS[name], facts)
        if outcome is None:
            continue
        t = tallies.setdefault(name, CheckTally())
        t.graphs_tested += 1
        if not outcome.holds:
            t.violations += 1
            violations.append(Violation(check=name, graph6=facts.g6, detail=outcome.detail))
            logger.warning("%s fails on %s: %s", name, facts.g6, outcome.detail)
            if t.violations == 1:
                t.example_g6 = facts.g6
        elif outcome.tight:
            t.equality_count += 1
            tightness[name] = tightness.get(name, 0) + 1
            if t.example_g6 is None:
                t.example_g6 = facts.g6
        for entry in outcome.tight_entries:
            key = f"{name}:{entry}"
            tightness[key] = tightness.get(key, 0) + 1


def run_chunk(chunk: Chunk) -> ChunkResult:
    result = ChunkResult(n=chunk.n, index=chunk.index)
    for g in chunk_graphs(chunk):
        facts = GraphFacts(g, exact_aux=chunk.exact_aux)
        tally_graph(facts, chunk.checks, result.tallies, result.violations, result.tightness)
    return result


def merge_results(parts: Iterable[ChunkResult], n_max: int, source: str = "exhaustive") -> SweepResult:
    tallies: dict[str, CheckTally] = {}
    tightness: dict[str, int] = {}
    violations: list[Violation] = []
    for part in sorted(parts, key=lambda p: (p.n, p.index)):
        for name, t in part.tallies.items():
            tallies[name] = tallies[name].merge(t) if name in tallies else t
        for key, count in part.tightness.items():
            tightness[key] = tightness.get(key, 0) + count
        violations.extend(part.violations)
    violations.sort(key=lambda v: (v.check, v.graph6))
    return SweepResult(
        n_max=n_max,
        source=source,
        checks=dict(sorted(tallies.items())),
        violations=violations,
        tightness=dict(sorted(tightness.items())),
    )


def sweep_theorems(
    n_max: int,
    checks: Sequence[str] | None = None,
    jobs: int = 1,
    connected_only: bool = False,
    dedup: bool = False,
    exact_aux: bool = False,
    chunk_bits: int = DEFAULT_CHUNK_BITS,
    progress: bool = False,
) -> SweepResult:
    """Run the named checks on every graph of order 1..n_max.

    Violations are collected, never raised.
    """
    if n_max < 1:
        raise ParameterError(f"n_max must be positive, got {n_max}")
    if n_max > MAX_ORDER:
        raise GraphSizeError(f"exhaustive sweeps stop at n = {MAX_ORDER}, got {n_max}; use sample_verify")
    if jobs < 1:
        raise ParameterError(f"jobs must be positive, got {jobs}")
    names = resolve_checks(checks)
    chunks = [
        chunk
        for n in range(1, n_max + 1)
        for chunk in make_chunks(n, names, chunk_bits, dedup, connected_only, exact_aux)
    ]
    logger.info("sweep n<=%d: %d checks, %d chunks, %d workers", n_max, len(names), len(chunks), jobs)
    if jobs == 1:
        parts = [run_chunk(c) for c in tqdm(chunks, desc="sweep", disable=not progress)]
    else:
        parts = process_map(run_chunk, chunks, max_workers=jobs, chunksize=1, desc="sweep", disable=not progress)
    result = merge_results(parts, n_max)
    for name in names:
        result.checks.setdefault(name, CheckTally())
    result.checks = dict(sorted(result.checks.items()))
    logger.info("sweep %s done: %d violations", result.run_id, result.violation_count)
    return result
