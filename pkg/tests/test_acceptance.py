"""Long exhaustive and sampled runs. Deselect with -m "not slow"."""

from fractions import Fraction

import numpy as np
import pytest

from src.isolation.bounds import grid_bounds
from src.isolation.constructive import (
    equal_degree_tree_isolating,
    grid_isolating,
    randomized_bipartite_isolating,
    randomized_isolating,
    tree_k_isolating,
)
from src.isolation.families import (
    complete,
    corona_k2,
    cycle,
    equal_degree_caterpillar,
    f_rst,
    grid,
    hypercube,
    outerplanar_sharp,
    path,
    path_of_stars,
    petersen,
    random_regular,
    random_tree,
    star,
)
from src.isolation.graph_core import Graph
from src.isolation.patterns import ISOLATION, StarFamily, check_certificate
from src.isolation.solvers import exact_isolation
from src.isolation.verify import canonical_masks, sweep_theorems

pytestmark = pytest.mark.slow

RUNS = 200


def iota(g, k=0):
    return exact_isolation(g, StarFamily(k=k))[0]


def test_non_monotone_under_subgraphs():
    assert (iota(complete(5)), iota(cycle(5)), iota(path(5))) == (1, 2, 1)


def test_isomorphism_classes_on_seven_vertices():
    assert len(canonical_masks(7)) == 1044


def test_full_sweep_to_five():
    result = sweep_theorems(5, jobs=4)
    assert result.violation_count == 0, result.violations


def test_third_on_connected_graphs_to_seven():
    result = sweep_theorems(7, ["thm-n3", "thm-n3-constructive"], jobs=4, connected_only=True)
    assert result.violation_count == 0, result.violations
    assert result.checks["thm-n3"].graphs_tested == result.checks["thm-n3-constructive"].graphs_tested
    assert result.checks["thm-n3"].equality_count > 0


def test_bound_sandwich_to_six():
    result = sweep_theorems(6, ["sandwich-k0", "sandwich-k1"], jobs=4)
    assert result.violation_count == 0, result.violations


def test_nordhaus_gaddum_to_seven():
    names = ["ng-lower", "ng-iota3", "ng-delta0", "ng-delta1", "ng-delta2", "ng-delta3"]
    result = sweep_theorems(7, names, jobs=4, dedup=True)
    assert result.violation_count == 0, result.violations
    assert result.checks["ng-delta0"].equality_count > 0
    assert result.checks["ng-delta1"].equality_count > 0


def test_product_and_double_to_five():
    result = sweep_theorems(5, ["thm-dom-i", "thm-dom-ii"], jobs=4)
    assert result.violation_count == 0, result.violations


@pytest.mark.parametrize("base", [path(4), cycle(5), star(3)], ids=["P4", "C5", "K13"])
@pytest.mark.parametrize("mode", ["one_edge", "two_edges"])
def test_corona_is_sharp(base, mode):
    g = corona_k2(base, mode)
    assert 3 * iota(g) == g.n


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (2, 0, 1), (0, 2, 1)])
def test_f_rst_is_sharp(r, s, t):
    assert iota(f_rst(r, s, t), 1) == r + s + 2 * t


@pytest.mark.parametrize("t,k", [(3, 1), (4, 0), (2, 2)])
def test_path_of_stars_is_sharp(t, k):
    assert iota(path_of_stars(t, k), k) == t


@pytest.mark.parametrize("p", [2, 3])
def test_outerplanar_is_sharp(p):
    g = outerplanar_sharp(p)
    assert 4 * iota(g) == g.n


def test_torus_four_by_four():
    assert iota(grid("torus", 4, 4)) == 2


def _mean_within(sizes: list[int], bound: float) -> bool:
    a = np.asarray(sizes, dtype=float)
    return float(a.mean()) <= bound + 2 * float(a.std(ddof=1)) / np.sqrt(len(a))


@pytest.mark.parametrize("g", [petersen(), hypercube(3), random_regular(20, 4, 0)], ids=["petersen", "Q3", "reg4"])
def test_randomized_mean_size(g):
    delta = g.min_degree()
    sizes = []
    for seed in range(RUNS):
        cert = randomized_isolating(g, seed)
        assert check_certificate(g, cert)
        sizes.append(cert.size)
    assert _mean_within(sizes, (np.log(delta + 1) + 0.5) / (delta + 1) * g.n)


def _k44_minus_matching() -> Graph:
    return Graph.from_edges(8, ((a, 4 + b) for a in range(4) for b in range(4) if a != b))


@pytest.mark.parametrize("g", [cycle(6), hypercube(3), _k44_minus_matching()], ids=["C6", "Q3", "K44-M"])
def test_randomized_bipartite_mean_size(g):
    delta = g.min_degree()
    sizes = []
    for seed in range(RUNS):
        cert = randomized_bipartite_isolating(g, seed)
        assert check_certificate(g, cert)
        sizes.append(cert.size)
    assert _mean_within(sizes, (np.log(delta) + 1) / (2 * delta) * g.n)


def test_random_trees():
    for seed in range(500):
        n = 1 + seed % 16
        t = random_tree(n, seed)
        for k in range(3):
            if n == k + 2 and t.max_degree() == k + 1:
                continue
            cert = tree_k_isolating(t, k)
            assert check_certificate(t, cert)
            assert cert.size <= n // (k + 3)
            assert iota(t, k) <= n // (k + 3)


@pytest.mark.parametrize("t,r", [(4, 4), (5, 3), (3, 5)])
def test_equal_degree_caterpillars_meet_the_bound(t, r):
    g = equal_degree_caterpillar(t, r)
    target = Fraction(g.n - 2, 2 * (r - 1))
    assert iota(g) == target
    assert equal_degree_tree_isolating(g, 0, r).size == target


@pytest.mark.parametrize("kind", ["torus", "cylinder", "grid"])
@pytest.mark.parametrize("s", [3, 4, 5, 6])
@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_grid_sandwich(kind, s, t):
    g = grid(kind, s, t)
    lower, upper = grid_bounds(kind, s, t)
    cert = grid_isolating(kind, s, t)
    assert check_certificate(g, cert) == ("exceeds-bound" not in cert.note)
    exact = exact_isolation(g, ISOLATION)[0]
    assert lower <= exact <= min(upper, cert.size)
