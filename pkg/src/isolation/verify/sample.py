"""Sampled verification beyond the exhaustive range, driven by the generators."""

import logging
from collections.abc import Callable, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from ..errors import ParameterError
from ..families import GridKind, grid, line_graph, random_polygon_triangulation, random_tree
from ..graph_core import Graph
from ..seeding import make_rng
from .checks import GraphFacts
from .models import CheckTally, SweepResult, Violation
from .sweep import resolve_checks, tally_graph

logger = logging.getLogger(__name__)

GRID_SIDES = (3, 4, 5, 6)
GRID_KINDS: tuple[GridKind, ...] = ("torus", "cylinder", "grid")


class Sample(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Graph
    grid: tuple[GridKind, int, int] | None = None


def _seed(rng: np.random.Generator) -> int:
    return int(rng.integers(0, 2**32))


def _trees(rng: np.random.Generator, max_n: int) -> Sample:
    n = int(rng.integers(1, max_n + 1))
    return Sample(graph=random_tree(n, _seed(rng)))


def _polygons(rng: np.random.Generator, max_n: int) -> Sample:
    n = int(rng.integers(4, max(max_n, 4) + 1))
    return Sample(graph=random_polygon_triangulation(n, _seed(rng)))


def _grids(rng: np.random.Generator, max_n: int) -> Sample:
    sides = [s for s in GRID_SIDES if s <= max_n]
    if not sides:
        raise ParameterError(f"grid samples need a side of at least {GRID_SIDES[0]}, got max_n = {max_n}")
    kind = GRID_KINDS[int(rng.integers(len(GRID_KINDS)))]
    s, t = (sides[int(i)] for i in rng.integers(len(sides), size=2))
    return Sample(graph=grid(kind, s, t), grid=(kind, s, t))


def _gnp(rng: np.random.Generator, n: int) -> Graph:
    hits = rng.random(n * (n - 1) // 2) < 0.5
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    return Graph.from_edges(n, (pair for pair, hit in zip(pairs, hits) if hit))


def _lines(rng: np.random.Generator, max_n: int) -> Sample:
    n = int(rng.integers(2, max(max_n, 2) + 1))
    return Sample(graph=line_graph(_gnp(rng, n)))


def _random(rng: np.random.Generator, max_n: int) -> Sample:
    n = int(rng.integers(1, max_n + 1))
    return Sample(graph=_gnp(rng, n))


class Sampler(BaseModel):
    model_config = ConfigDict(frozen=True)

    draw: Callable[[np.random.Generator, int], Sample]
    max_n: int = Field(..., description="Default largest order (grid side for grids)")
    checks: tuple[str, ...] = Field(..., description="Checks run when none are named")


SAMPLERS: dict[str, Sampler] = {
    "trees": Sampler(draw=_trees, max_n=30, checks=("tree-k0", "tree-k1", "tree-k2")),
    "polygons": Sampler(draw=_polygons, max_n=14, checks=("outerplanar-quarter",)),
    "grids": Sampler(draw=_grids, max_n=6, checks=("grid-sandwich",)),
    "line": Sampler(draw=_lines, max_n=6, checks=("claw-free-lower",)),
    "random": Sampler(
        draw=_random,
        max_n=9,
        checks=("sandwich-k0", "sandwich-k1", "thm-n3-constructive", "ng-ratio", "ng-log"),
    ),
}


def sample_verify(
    family: str,
    trials: int,
    seed: int,
    checks: Sequence[str] | None = None,
    max_n: int | None = None,
    exact_aux: bool = False,
    progress: bool = False,
) -> SweepResult:
    """Run checks on `trials` graphs drawn from a sampler; same result shape as a sweep."""
    sampler = SAMPLERS.get(family)
    if sampler is None:
        raise ParameterError(f"unknown sampler {family!r}; known: {', '.join(sorted(SAMPLERS))}")
    if trials < 0:
        raise ParameterError(f"trials must be non-negative, got {trials}")
    names = resolve_checks(checks, default=sampler.checks)
    limit = sampler.max_n if max_n is None else max_n
    rng = make_rng(seed)
    tallies: dict[str, CheckTally] = {name: CheckTally() for name in names}
    violations: list[Violation] = []
    tightness: dict[str, int] = {}
    largest = 0
    for _ in tqdm(range(trials), desc=family, disable=not progress):
        sample = sampler.draw(rng, limit)
        largest = max(largest, sample.graph.n)
        facts = GraphFacts(sample.graph, exact_aux=exact_aux, grid=sample.grid)
        tally_graph(facts, names, tallies, violations, tightness)
    violations.sort(key=lambda v: (v.check, v.graph6))
    result = SweepResult(
        n_max=largest,
        source=family,
        checks=dict(sorted(tallies.items())),
        violations=violations,
        tightness=dict(sorted(tightness.items())),
    )
    logger.info("sample %s (%s, %d trials): %d violations", result.run_id, family, trials, result.violation_count)
    return result
